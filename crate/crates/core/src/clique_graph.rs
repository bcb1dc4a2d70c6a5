use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::{maximal_cliques_with_cap, Clique, Graph, VertexId, DEFAULT_CLIQUE_CAP};

/// `K(G)` together with the maximal clique behind each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueGraphResult {
    pub kg: Graph,
    /// `cliques[i]` is the maximal clique represented by `kg` vertex `i`.
    pub cliques: Vec<Clique>,
}

pub fn clique_graph(g: &Graph) -> Result<CliqueGraphResult> {
    clique_graph_with_cap(g, DEFAULT_CLIQUE_CAP)
}

/// Intersection graph of the maximal cliques, numbered in
/// [`crate::graph::maximal_cliques`] order. Edges come from per-vertex
/// membership lists rather than pairwise clique comparison.
pub fn clique_graph_with_cap(g: &Graph, cap: usize) -> Result<CliqueGraphResult> {
    let cliques = maximal_cliques_with_cap(g, cap)?;
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c.vertices() {
            member_of[v].push(i);
        }
    }
    let mut edges = Vec::new();
    for list in &member_of {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                edges.push((i, j));
            }
        }
    }
    let kg = Graph::from_edges_dedup(cliques.len(), edges);
    Ok(CliqueGraphResult { kg, cliques })
}

/// `|cliques[i] ∩ cliques[j]|` for every edge `(i, j)` of `K(G)`.
pub fn kg_intersection_sizes(r: &CliqueGraphResult) -> BTreeMap<(VertexId, VertexId), usize> {
    r.kg
        .edges()
        .iter()
        .map(|&(i, j)| ((i, j), r.cliques[i].intersection_size(&r.cliques[j])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::graph::{are_isomorphic, is_diamond_free};
    use proptest::prelude::*;

    #[test]
    fn small_clique_graphs() {
        let k = clique_graph(&complete(3)).unwrap();
        assert_eq!((k.kg.n(), k.kg.m()), (1, 0));
        let k = clique_graph(&diamond()).unwrap();
        assert!(are_isomorphic(&k.kg, &complete(2)));
        let k = clique_graph(&cycle(5)).unwrap();
        assert!(are_isomorphic(&k.kg, &cycle(5)));
    }

    #[test]
    fn isolated_vertices_become_isolated_kg_vertices() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let k = clique_graph(&g).unwrap();
        assert_eq!(k.kg.n(), 3);
        assert_eq!(k.kg.degree(2), 0);
        assert_eq!(k.cliques[2].vertices(), &[3]);
    }

    #[test]
    fn intersection_sizes() {
        let k = clique_graph(&diamond()).unwrap();
        assert_eq!(kg_intersection_sizes(&k).into_iter().collect::<Vec<_>>(), vec![((0, 1), 2)]);
        let k = clique_graph(&cycle(5)).unwrap();
        assert!(kg_intersection_sizes(&k).values().all(|&s| s == 1));
        assert_eq!(kg_intersection_sizes(&k).len(), 5);
        assert!(kg_intersection_sizes(&clique_graph(&complete(3)).unwrap()).is_empty());
    }

    proptest! {
        #[test]
        fn diamond_free_properties(n in 1usize..=10, order in proptest::collection::vec(0usize..45, 0..45)) {
            // Grow a diamond-free graph by rejecting edges that create a diamond.
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for k in order {
                if pairs.is_empty() { break; }
                let e = pairs[k % pairs.len()];
                if edges.contains(&e) { continue; }
                edges.push(e);
                if !is_diamond_free(&Graph::from_edges(n, edges.clone()).unwrap()) {
                    edges.pop();
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let k = clique_graph(&g).unwrap();
            prop_assert!(kg_intersection_sizes(&k).values().all(|&s| s <= 1));
            prop_assert!(is_diamond_free(&k.kg));
            prop_assert!(k.cliques.len() <= g.m() + g.n());
            for &(i, j) in k.kg.edges() {
                prop_assert!(k.cliques[i].intersection_size(&k.cliques[j]) > 0);
            }
        }
    }
}
