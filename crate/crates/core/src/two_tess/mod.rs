//! Linear-time recognition of graphs coverable by two tessellations, i.e.
//! line graphs of bipartite multigraphs, with cover extraction.

mod krausz;

use rayon::prelude::*;
use serde::Serialize;

use crate::clique_graph::{clique_graph, clique_graph_with_cap};
use crate::error::Result;
use crate::graph::{
    is_bipartite, true_twin_classes, Bipartition, Graph, Multigraph, VertexId, DEFAULT_CLIQUE_CAP,
};
use crate::tessellation::{Tessellation, TessellationCover};

pub use krausz::{line_graph, recognize_line_graph_simple, SimpleRoot};

/// A multigraph whose line graph is the input. `edge_map[i]` is the input
/// vertex for the `i`-th edge occurrence of `root`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootGraph {
    pub root: Multigraph,
    pub edge_map: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Bipartite root with its two sides.
    Root { root: RootGraph, sides: Bipartition },
    NonCliqueTwinClass,
    NotLineGraph,
    RootNonBipartite,
}

impl Certificate {
    pub fn tag(&self) -> &'static str {
        match self {
            Certificate::Root { .. } => "bipartite_root",
            Certificate::NonCliqueTwinClass => "non_clique_twin_class",
            Certificate::NotLineGraph => "not_line_graph",
            Certificate::RootNonBipartite => "root_non_bipartite",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoTessResult {
    pub decision: bool,
    pub cover: Option<TessellationCover>,
    pub certificate: Certificate,
}

/// Reference decision: two tessellations suffice iff `K(G)` is bipartite.
pub fn two_tess_reference(g: &Graph) -> Result<bool> {
    two_tess_reference_with_cap(g, DEFAULT_CLIQUE_CAP)
}

pub fn two_tess_reference_with_cap(g: &Graph, cap: usize) -> Result<bool> {
    Ok(is_bipartite(&clique_graph_with_cap(g, cap)?.kg).is_some())
}

/// Per component: collapse true-twin classes, decide tiny quotients
/// directly, recognise the rest as line graphs, re-expand twins as parallel
/// root edges and test the root for bipartiteness. A yes answer comes with a
/// cover of at most two tessellations, one per root side.
pub fn is_two_tessellable(g: &Graph) -> TwoTessResult {
    let components = g.components();
    let outcomes: Vec<Result<Piece, Certificate>> = components
        .par_iter()
        .map(|comp| {
            if comp.len() == g.n() {
                decide_component(g)
            } else {
                decide_component(&g.induced_subgraph(comp))
            }
        })
        .collect();

    let mut occurrences = Vec::new();
    let mut edge_map = Vec::new();
    let (mut left, mut right) = (Vec::new(), Vec::new());
    let mut offset = 0;
    for (comp, outcome) in components.iter().zip(outcomes) {
        let piece = match outcome {
            Ok(p) => p,
            Err(witness) => {
                return TwoTessResult {
                    decision: false,
                    cover: None,
                    certificate: witness,
                }
            }
        };
        for ((a, b), x) in piece.occurrences.into_iter().zip(piece.edge_map) {
            occurrences.push((a + offset, b + offset));
            edge_map.push(comp[x]);
        }
        left.extend(piece.left.iter().map(|&x| x + offset));
        right.extend(piece.right.iter().map(|&x| x + offset));
        offset += piece.root_n;
    }

    // Regroup occurrences so that parallel copies are adjacent, matching
    // the occurrence numbering of the assembled multigraph.
    let root = Multigraph::from_occurrences(offset, &occurrences).expect("root vertices in range");
    let mut tagged: Vec<((VertexId, VertexId), VertexId)> = occurrences
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .zip(edge_map)
        .collect();
    let rank: std::collections::HashMap<(VertexId, VertexId), usize> =
        root.edges().iter().enumerate().map(|(i, e)| ((e.u, e.v), i)).collect();
    tagged.sort_by_key(|&(key, x)| (rank[&key], x));
    let edge_map: Vec<VertexId> = tagged.iter().map(|&(_, x)| x).collect();

    left.sort_unstable();
    right.sort_unstable();
    let sides = Bipartition { left, right };
    let cover = cover_from_root(&root, &edge_map, &sides);
    TwoTessResult {
        decision: true,
        cover: Some(cover),
        certificate: Certificate::Root {
            root: RootGraph { root, edge_map },
            sides,
        },
    }
}

/// Tessellation per side: each root vertex contributes the clique of input
/// vertices whose edges meet it. Empty tessellations are dropped.
fn cover_from_root(root: &Multigraph, edge_map: &[VertexId], sides: &Bipartition) -> TessellationCover {
    let mut at: Vec<Vec<VertexId>> = vec![Vec::new(); root.n()];
    for ((a, b), &x) in root.occurrences().zip(edge_map) {
        at[a].push(x);
        at[b].push(x);
    }
    let mut tessellations: Vec<Tessellation> = [&sides.left, &sides.right]
        .into_iter()
        .map(|side| Tessellation::new(side.iter().map(|&x| at[x].clone())))
        .filter(|t| !t.is_empty())
        .collect();
    tessellations.sort();
    // A component that is a single twin class yields the same clique twice.
    tessellations.dedup();
    TessellationCover::new(tessellations)
}

/// Bipartite root of one connected component, in component-local numbering.
struct Piece {
    root_n: usize,
    occurrences: Vec<(VertexId, VertexId)>,
    edge_map: Vec<VertexId>,
    left: Vec<VertexId>,
    right: Vec<VertexId>,
}

fn decide_component(g: &Graph) -> Result<Piece, Certificate> {
    let classes = true_twin_classes(g);
    if classes.iter().any(|c| !g.is_clique(c)) {
        return Err(Certificate::NonCliqueTwinClass);
    }
    let reps: Vec<VertexId> = classes.iter().map(|c| c[0]).collect();
    let owned;
    let quotient = if reps.len() == g.n() {
        g
    } else {
        owned = g.induced_subgraph(&reps);
        &owned
    };

    // (quotient vertex a, quotient vertex b) root edges, one per quotient vertex.
    let (root_n, ends): (usize, Vec<(VertexId, VertexId)>) = if quotient.n() <= 4 {
        small_root(quotient).ok_or(Certificate::RootNonBipartite)?
    } else {
        let r = recognize_line_graph_simple(quotient).ok_or(Certificate::NotLineGraph)?;
        let mut ends = vec![(0, 0); quotient.n()];
        for (e, &x) in r.edge_map.iter().enumerate() {
            ends[x] = r.root.edges()[e];
        }
        (r.root.n(), ends)
    };
    let simple_root = Graph::from_edges_dedup(root_n, ends.iter().copied());
    let sides = is_bipartite(&simple_root).ok_or(Certificate::RootNonBipartite)?;

    let mut occurrences = Vec::with_capacity(g.n());
    let mut edge_map = Vec::with_capacity(g.n());
    for (q, class) in classes.iter().enumerate() {
        for &x in class {
            occurrences.push(ends[q]);
            edge_map.push(x);
        }
    }
    Ok(Piece {
        root_n,
        occurrences,
        edge_map,
        left: sides.left,
        right: sides.right,
    })
}

/// Quotients on at most four vertices are decided straight from `K(G)`.
/// A proper 2-colouring of `K(G)` gives two tessellations; the root has a
/// vertex per clique of each (singletons included) and every input vertex
/// becomes the edge joining its two cliques.
fn small_root(q: &Graph) -> Option<(usize, Vec<(VertexId, VertexId)>)> {
    let kg = clique_graph(q).expect("tiny graph");
    let sides = is_bipartite(&kg.kg)?;
    let mut owner = [vec![usize::MAX; q.n()], vec![usize::MAX; q.n()]];
    let mut root_n = 0;
    for (s, side) in [&sides.left, &sides.right].into_iter().enumerate() {
        for &c in side {
            for &v in kg.cliques[c].vertices() {
                owner[s][v] = root_n;
            }
            root_n += 1;
        }
    }
    // Vertices missed by one side sit in a singleton there.
    for side in &mut owner {
        for o in side.iter_mut() {
            if *o == usize::MAX {
                *o = root_n;
                root_n += 1;
            }
        }
    }
    let ends = q.vertices().map(|v| (owner[0][v], owner[1][v])).collect();
    Some((root_n, ends))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::tessellation::validate_cover;

    fn yes(g: &Graph) -> TessellationCover {
        let r = is_two_tessellable(g);
        assert!(r.decision, "{:?}", r.certificate);
        let c = r.cover.unwrap();
        validate_cover(g, &c).unwrap();
        assert!(c.len() <= 2);
        if let Certificate::Root { root, .. } = &r.certificate {
            let l = line_graph(&root.root);
            let relabelled =
                Graph::from_edges(g.n(), l.edges().iter().map(|&(a, b)| (root.edge_map[a], root.edge_map[b])))
                    .unwrap();
            assert_eq!(relabelled.edges(), g.edges());
        }
        c
    }

    #[test]
    fn examples() {
        let c = yes(&diamond());
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            "[[[0,1,2]],[[0,1,3]]]"
        );
        let r = is_two_tessellable(&cycle(5));
        assert!(!r.decision);
        assert_eq!(r.certificate, Certificate::RootNonBipartite);
        assert_eq!(yes(&complete(3)).len(), 1);
        yes(&Graph::empty(3));
        yes(&disjoint_union(&cycle(6), &complete(4)));
        assert_eq!(is_two_tessellable(&star(3)).certificate.tag(), "root_non_bipartite");
        assert_eq!(is_two_tessellable(&petersen()).certificate, Certificate::NotLineGraph);
    }

    #[test]
    fn reference_examples() {
        assert!(two_tess_reference(&diamond()).unwrap());
        assert!(!two_tess_reference(&cycle(5)).unwrap());
        assert!(two_tess_reference(&complete(4)).unwrap());
    }
}
