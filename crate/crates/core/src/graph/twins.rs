use std::collections::HashMap;

use super::{Graph, VertexId};

fn mix(v: VertexId) -> u64 {
    // splitmix64 finaliser
    let mut z = (v as u64).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn closed_neighborhood(g: &Graph, v: VertexId) -> Vec<VertexId> {
    let nb = g.neighbors(v);
    let at = nb.partition_point(|&w| w < v);
    let mut out = Vec::with_capacity(nb.len() + 1);
    out.extend_from_slice(&nb[..at]);
    out.push(v);
    out.extend_from_slice(&nb[at..]);
    out
}

/// Partition of the vertices into true-twin classes (equal closed
/// neighbourhoods). Classes are sorted internally and ordered by their
/// smallest vertex.
///
/// Vertices are bucketed by `(degree, order-independent hash of N[v])` and
/// each bucket is split by exact comparison, so the expected running time is
/// linear in `n + m`.
pub fn true_twin_classes(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut buckets: HashMap<(usize, u64), Vec<VertexId>> = HashMap::new();
    for v in g.vertices() {
        let h = g
            .neighbors(v)
            .iter()
            .fold(mix(v), |acc, &w| acc.wrapping_add(mix(w)));
        buckets.entry((g.degree(v), h)).or_default().push(v);
    }
    let mut classes = Vec::with_capacity(g.n());
    for members in buckets.into_values() {
        if members.len() == 1 {
            classes.push(members);
            continue;
        }
        let mut groups: Vec<(Vec<VertexId>, Vec<VertexId>)> = Vec::new();
        for v in members {
            let key = closed_neighborhood(g, v);
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, class)) => class.push(v),
                None => groups.push((key, vec![v])),
            }
        }
        classes.extend(groups.into_iter().map(|(_, c)| c));
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_unstable_by_key(|c| c[0]);
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(true_twin_classes(&complete(3)), vec![vec![0, 1, 2]]);
        assert_eq!(
            true_twin_classes(&cycle(4)),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            true_twin_classes(&diamond()),
            vec![vec![0, 1], vec![2], vec![3]]
        );
    }

    proptest! {
        #[test]
        fn classes_are_exact(n in 1usize..=9, bits in proptest::collection::vec(any::<bool>(), 36)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let classes = true_twin_classes(&g);
            let mut class_of = vec![usize::MAX; n];
            for (i, c) in classes.iter().enumerate() {
                prop_assert!(g.is_clique(c));
                for &v in c { class_of[v] = i; }
            }
            prop_assert!(class_of.iter().all(|&c| c != usize::MAX));
            for u in 0..n {
                for v in 0..n {
                    let same = closed_neighborhood(&g, u) == closed_neighborhood(&g, v);
                    prop_assert_eq!(same, class_of[u] == class_of[v]);
                }
            }
        }
    }
}
