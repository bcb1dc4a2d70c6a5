use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Two sides of a proper 2-coloring, each sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
}

impl Bipartition {
    /// `Some(false)` for left, `Some(true)` for right.
    pub fn side_of(&self, v: VertexId) -> Option<bool> {
        if self.left.binary_search(&v).is_ok() {
            Some(false)
        } else if self.right.binary_search(&v).is_ok() {
            Some(true)
        } else {
            None
        }
    }
}

fn has_common_neighbor(g: &Graph, u: VertexId, v: VertexId) -> bool {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

pub(crate) fn common_neighbors(g: &Graph, u: VertexId, v: VertexId) -> Vec<VertexId> {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
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

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| !has_common_neighbor(g, u, v))
}

/// No induced `K_4 - e`: equivalently, the common neighbours of every edge
/// are pairwise adjacent.
pub fn is_diamond_free(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| {
        let common = common_neighbors(g, u, v);
        g.is_clique(&common)
    })
}

/// BFS 2-coloring; the lowest vertex of every component goes left.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (v, s) in side.into_iter().enumerate() {
        if s == Some(false) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Some(Bipartition { left, right })
}

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut index = vec![usize::MAX; n];
    // (weight, Reverse(vertex)) so the lowest index wins ties.
    let mut queue: BTreeSet<(usize, std::cmp::Reverse<VertexId>)> =
        (0..n).map(|v| (0, std::cmp::Reverse(v))).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&(w, std::cmp::Reverse(v))) = queue.iter().next_back() {
        queue.remove(&(w, std::cmp::Reverse(v)));
        visited[v] = true;
        index[v] = order.len();
        order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                queue.remove(&(weight[u], std::cmp::Reverse(u)));
                weight[u] += 1;
                queue.insert((weight[u], std::cmp::Reverse(u)));
            }
        }
    }
    // Reverse MCS order is a PEO iff, for each v, its earlier-visited
    // neighbours minus the most recent one are adjacent to that one.
    for &v in &order {
        let earlier: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| index[u] < index[v])
            .collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&u| index[u]) else {
            continue;
        };
        if earlier.iter().any(|&u| u != parent && !g.has_edge(u, parent)) {
            return false;
        }
    }
    true
}

/// Every connected component is complete.
pub fn is_cluster_graph(g: &Graph) -> bool {
    g.components()
        .iter()
        .all(|c| c.iter().all(|&v| g.degree(v) + 1 == c.len()))
}

/// Checks that `stables` are independent sets and `cliques` are complete.
/// The sets together must partition the vertex set.
pub fn verify_kl_partition(
    g: &Graph,
    stables: &[Vec<VertexId>],
    cliques: &[Vec<VertexId>],
) -> Result<bool> {
    let mut seen = vec![false; g.n()];
    for &v in stables.iter().chain(cliques).flatten() {
        if v >= g.n() {
            return Err(Error::precondition(format!("vertex {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::precondition(format!("vertex {v} appears twice")));
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::precondition(format!("vertex {v} not covered")));
    }
    let stable_ok = stables.iter().all(|s| {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
    });
    Ok(stable_ok && cliques.iter().all(|c| g.is_clique(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn triangles() {
        assert!(is_triangle_free(&cycle(5)));
        assert!(!is_triangle_free(&complete(3)));
        assert!(is_triangle_free(&petersen()));
    }

    #[test]
    fn triangle_free_matches_triples() {
        let p = petersen();
        let mut any = false;
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    any |= p.has_edge(a, b) && p.has_edge(b, c) && p.has_edge(a, c);
                }
            }
        }
        assert!(!any);
    }

    #[test]
    fn diamonds() {
        assert!(is_diamond_free(&complete(4)));
        assert!(!is_diamond_free(&diamond()));
        assert!(is_diamond_free(&cycle(4)));
    }

    #[test]
    fn bipartite() {
        assert_eq!(
            is_bipartite(&cycle(4)),
            Some(Bipartition {
                left: vec![0, 2],
                right: vec![1, 3]
            })
        );
        assert_eq!(is_bipartite(&cycle(5)), None);
        assert_eq!(
            is_bipartite(&complete(2)),
            Some(Bipartition {
                left: vec![0],
                right: vec![1]
            })
        );
    }

    #[test]
    fn chordality() {
        assert!(!is_chordal(&cycle(4)));
        assert!(!is_chordal(&cycle(6)));
        assert!(is_chordal(&path(7)));
        assert!(is_chordal(&star(4)));
        assert!(is_chordal(&complete(5)));
        assert!(is_chordal(&diamond()));
    }

    #[test]
    fn clusters() {
        let k3k2 = disjoint_union(&complete(3), &complete(2));
        assert!(is_cluster_graph(&k3k2));
        assert!(!is_cluster_graph(&path(3)));
        assert!(!is_cluster_graph(&diamond()));
    }

    #[test]
    fn kl_partitions() {
        assert!(verify_kl_partition(&cycle(4), &[vec![0, 2], vec![1, 3]], &[]).unwrap());
        assert!(verify_kl_partition(&complete(3), &[], &[vec![0, 1, 2]]).unwrap());
        assert!(verify_kl_partition(&path(3), &[vec![0, 2]], &[vec![1]]).unwrap());
        assert!(!verify_kl_partition(&path(3), &[vec![0, 1]], &[vec![2]]).unwrap());
        assert!(verify_kl_partition(&path(3), &[vec![0, 2]], &[]).is_err());
        assert!(verify_kl_partition(&path(3), &[vec![0, 2], vec![1, 2]], &[]).is_err());
    }
}
