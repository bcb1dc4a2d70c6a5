//! Vertex and edge colouring: fast upper bounds and budgeted exact search.

mod edge;
mod exact;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub use edge::{bipartite_edge_coloring, edge_coloring_delta_plus_one, exact_chromatic_index};
pub use exact::{exact_chromatic_number, is_k_colorable};

/// Default node budget for the exact searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColoring {
    /// Colour of each vertex.
    pub colors: Vec<usize>,
    /// Number of distinct colours used.
    pub count: usize,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>) -> Self {
        let count = distinct(&colors);
        VertexColoring { colors, count }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    /// Colour of each edge, indexed by edge id.
    pub colors: Vec<usize>,
    pub count: usize,
}

impl EdgeColoring {
    pub fn new(colors: Vec<usize>) -> Self {
        let count = distinct(&colors);
        EdgeColoring { colors, count }
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Outcome of a budgeted exact search. `Unknown` carries the best witness
/// found before the budget ran out; it is never reported as optimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exact<T> {
    Solved(T),
    Unknown(Option<T>),
}

impl<T> Exact<T> {
    pub fn solved(self) -> Option<T> {
        match self {
            Exact::Solved(t) => Some(t),
            Exact::Unknown(_) => None,
        }
    }

    pub fn is_solved(&self) -> bool {
        matches!(self, Exact::Solved(_))
    }

    /// The optimal witness if solved, else the best one found (if any).
    pub fn best(self) -> Option<T> {
        match self {
            Exact::Solved(t) => Some(t),
            Exact::Unknown(t) => t,
        }
    }
}

pub fn check_vertex_coloring(g: &Graph, colors: &[usize]) -> Result<()> {
    if colors.len() != g.n() {
        return Err(Error::ImproperColoring(format!(
            "{} colours for {} vertices",
            colors.len(),
            g.n()
        )));
    }
    match g.edges().iter().find(|&&(u, v)| colors[u] == colors[v]) {
        Some(&(u, v)) => Err(Error::ImproperColoring(format!(
            "edge {u}-{v} is monochromatic"
        ))),
        None => Ok(()),
    }
}

pub fn check_edge_coloring(g: &Graph, colors: &[usize]) -> Result<()> {
    if colors.len() != g.m() {
        return Err(Error::ImproperColoring(format!(
            "{} colours for {} edges",
            colors.len(),
            g.m()
        )));
    }
    for v in g.vertices() {
        let mut seen: Vec<usize> = g.incident_edges(v).iter().map(|&e| colors[e]).collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ImproperColoring(format!(
                "two edges at vertex {v} share colour {}",
                w[0]
            )));
        }
    }
    Ok(())
}

/// First-fit colouring in reverse smallest-last order; uses at most
/// `degeneracy + 1 <= Δ + 1` colours.
pub fn greedy_vertex_coloring(g: &Graph) -> VertexColoring {
    let order = crate::graph::degeneracy_order(g);
    let mut colors = vec![usize::MAX; g.n()];
    let mut taken = Vec::new();
    for &v in order.iter().rev() {
        taken.clear();
        taken.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            if colors[w] < taken.len() {
                taken[colors[w]] = true;
            }
        }
        colors[v] = taken.iter().position(|t| !t).unwrap();
    }
    VertexColoring::new(colors)
}

/// Mycielski construction: originals `0..n`, shadows `n..2n` (shadow of `i`
/// is `n + i`, adjacent to the neighbours of `i`), apex `2n`.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().to_vec();
    for &(u, v) in g.edges() {
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Graph::from_edges_dedup(2 * n + 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::graph::is_triangle_free;

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_vertex_coloring(&complete(3)).count, 3);
        assert_eq!(greedy_vertex_coloring(&cycle(4)).count, 2);
        assert_eq!(greedy_vertex_coloring(&cycle(5)).count, 3);
        for g in [petersen(), diamond(), star(5), mycielskian(&cycle(5))] {
            let c = greedy_vertex_coloring(&g);
            check_vertex_coloring(&g, &c.colors).unwrap();
            assert!(c.count <= g.max_degree() + 1);
        }
    }

    #[test]
    fn mycielskian_of_c5() {
        let m = mycielskian(&cycle(5));
        assert_eq!(m.n(), 11);
        assert_eq!(m.m(), 20);
        assert!(is_triangle_free(&m));
        assert!(is_triangle_free(&mycielskian(&m)));
    }

    #[test]
    fn validators() {
        assert!(check_vertex_coloring(&cycle(4), &[0, 1, 0, 1]).is_ok());
        assert!(check_vertex_coloring(&cycle(4), &[0, 0, 1, 1]).is_err());
        assert!(check_edge_coloring(&path(3), &[0, 1]).is_ok());
        assert!(check_edge_coloring(&path(3), &[0, 0]).is_err());
    }
}
