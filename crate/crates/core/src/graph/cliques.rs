use super::{Clique, Graph, VertexId};
use crate::error::{Error, Result};

pub const DEFAULT_CLIQUE_CAP: usize = 100_000;

/// All inclusion-maximal cliques, sorted lexicographically. Isolated
/// vertices yield singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Clique>> {
    maximal_cliques_with_cap(g, DEFAULT_CLIQUE_CAP)
}

/// Bron–Kerbosch with Tomita pivoting, run from each vertex in degeneracy
/// order. Fails with [`Error::Capacity`] once more than `cap` cliques have
/// been found.
pub fn maximal_cliques_with_cap(g: &Graph, cap: usize) -> Result<Vec<Clique>> {
    let order = degeneracy_order(g);
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut search = Search {
        g,
        cap,
        out: Vec::new(),
    };
    for &v in &order {
        let (mut p, mut x) = (Vec::new(), Vec::new());
        for &w in g.neighbors(v) {
            if pos[w] > pos[v] {
                p.push(w);
            } else {
                x.push(w);
            }
        }
        let mut r = vec![v];
        search.expand(&mut r, p, x)?;
    }
    let mut out = search.out;
    out.sort_unstable();
    Ok(out)
}

/// Smallest-last ordering: repeatedly removes a minimum-degree vertex
/// (lowest index on ties).
pub(crate) fn degeneracy_order(g: &Graph) -> Vec<VertexId> {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<std::collections::BTreeSet<VertexId>> =
        vec![Default::default(); max_deg + 1];
    for v in 0..n {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut low = 0;
    for _ in 0..n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = *buckets[low].iter().next().unwrap();
        buckets[low].remove(&v);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                buckets[deg[w]].remove(&w);
                deg[w] -= 1;
                buckets[deg[w]].insert(w);
                low = low.min(deg[w]);
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    cap: usize,
    out: Vec<Clique>,
}

impl Search<'_> {
    fn expand(&mut self, r: &mut Vec<VertexId>, p: Vec<VertexId>, mut x: Vec<VertexId>) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() {
                if self.out.len() >= self.cap {
                    return Err(Error::Capacity {
                        what: "maximal clique enumeration",
                        limit: self.cap,
                    });
                }
                self.out.push(Clique::new(r.clone()));
            }
            return Ok(());
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| (intersect_count(&p, self.g.neighbors(u)), std::cmp::Reverse(u)))
            .unwrap();
        let pivot_nbrs = self.g.neighbors(pivot);
        let candidates: Vec<VertexId> = p
            .iter()
            .copied()
            .filter(|v| pivot_nbrs.binary_search(v).is_err())
            .collect();
        let mut p = p;
        for v in candidates {
            let nv = self.g.neighbors(v);
            let p_next = intersect(&p, nv);
            let x_next = intersect(&x, nv);
            r.push(v);
            self.expand(r, p_next, x_next)?;
            r.pop();
            if let Ok(i) = p.binary_search(&v) {
                p.remove(i);
            }
            if let Err(i) = x.binary_search(&v) {
                x.insert(i, v);
            }
        }
        Ok(())
    }
}

fn intersect(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn intersect_count(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, diamond};
    use proptest::prelude::*;

    fn sets(cliques: &[Clique]) -> Vec<Vec<VertexId>> {
        cliques.iter().map(|c| c.vertices().to_vec()).collect()
    }

    #[test]
    fn diamond_has_two_triangles() {
        assert_eq!(
            sets(&maximal_cliques(&diamond()).unwrap()),
            vec![vec![0, 1, 2], vec![0, 1, 3]]
        );
    }

    #[test]
    fn cycle_cliques_are_edges() {
        assert_eq!(
            sets(&maximal_cliques(&cycle(4)).unwrap()),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(sets(&maximal_cliques(&complete(3)).unwrap()), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn isolated_vertices_are_singletons() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(sets(&maximal_cliques(&g).unwrap()), vec![vec![0, 1], vec![2]]);
        assert!(maximal_cliques(&Graph::empty(0)).unwrap().is_empty());
    }

    #[test]
    fn capacity_guard_trips() {
        // Complement of a perfect matching on 12 vertices has 2^6 maximal cliques.
        let n = 12;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
        let g = Graph::from_edges(n, edges).unwrap();
        assert_eq!(maximal_cliques(&g).unwrap().len(), 64);
        assert!(matches!(
            maximal_cliques_with_cap(&g, 10),
            Err(Error::Capacity { .. })
        ));
    }

    fn brute_force(g: &Graph) -> Vec<Vec<VertexId>> {
        let n = g.n();
        let is_clique = |mask: u32| {
            (0..n).all(|u| {
                mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || g.has_edge(u, v))
            })
        };
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            if !is_clique(mask) {
                continue;
            }
            let maximal = (0..n).all(|w| mask >> w & 1 == 1 || !is_clique(mask | 1 << w));
            if maximal {
                out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
            }
        }
        out.sort();
        out
    }

    proptest! {
        #[test]
        fn matches_subset_brute_force(n in 1usize..=10, bits in proptest::collection::vec(any::<bool>(), 45)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let cliques = maximal_cliques(&g).unwrap();
            prop_assert_eq!(sets(&cliques), brute_force(&g));
            for &(u, v) in g.edges() {
                prop_assert!(cliques.iter().any(|c| c.contains(u) && c.contains(v)));
            }
        }
    }
}
