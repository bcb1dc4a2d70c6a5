use serde::{Deserialize, Serialize};

use crate::coloring::{check_vertex_coloring, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Graph, VertexId};
use crate::tessellation::{Tessellation, TessellationCover};

/// Witness for a `(k, l)`-graph: `k` stable sets and `l` cliques
/// partitioning the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlPartition {
    pub stables: Vec<Vec<VertexId>>,
    pub cliques: Vec<Vec<VertexId>>,
}

/// Chordal `(2,1)`-graph that is 4-tessellable iff `g` is 3-colourable.
///
/// Layout: `V(g)` as `0..n`, one vertex per edge of `g` at `n + e`, the
/// apex `u = n + m`, then three pendants for each vertex of `g` (in vertex
/// order) and three for `u`.
pub fn c5_chordal21(g: &Graph) -> Result<(Graph, KlPartition)> {
    let (edges, size) = c5_edges(g, 3)?;
    let h = Graph::from_edges(size, edges)?;
    let (n, m) = (g.n(), g.m());
    let mut first: Vec<VertexId> = (0..n).collect();
    first.push(n + m);
    let partition = KlPartition {
        stables: vec![first, (n + m + 1..size).collect()],
        cliques: vec![(n..n + m).collect()],
    };
    Ok((h, partition))
}

fn c5_edges(g: &Graph, per_vertex: usize) -> Result<(Vec<(VertexId, VertexId)>, usize)> {
    if is_bipartite(g).is_some() {
        return Err(Error::precondition("input graph is bipartite"));
    }
    let (n, m) = (g.n(), g.m());
    let u = n + m;
    let mut edges = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        edges.push((a, n + e));
        edges.push((b, n + e));
        edges.push((n + e, u));
        edges.extend((e + 1..m).map(|f| (n + e, n + f)));
    }
    let mut next = u + 1;
    for v in (0..n).chain([u]) {
        let count = if v == u { 3 } else { per_vertex };
        for _ in 0..count {
            edges.push((v, next));
            next += 1;
        }
    }
    Ok((edges, next))
}

/// The `(1,2)` variant: `V(g)` becomes a clique, each vertex of `g` keeps
/// two pendants, and a new vertex `u'` joined to `V(g)` gets three pendants.
///
/// Layout: as [`c5_chordal21`] with two pendants per vertex of `g`, then
/// `u'`, then the pendants of `u'`.
pub fn c6_12graph(g: &Graph) -> Result<(Graph, KlPartition)> {
    let (mut edges, size) = c5_edges(g, 2)?;
    let (n, m) = (g.n(), g.m());
    let u_prime = size;
    for a in 0..n {
        edges.extend((a + 1..n).map(|b| (a, b)));
        edges.push((a, u_prime));
    }
    edges.extend((1..=3).map(|i| (u_prime, u_prime + i)));
    let h = Graph::from_edges(u_prime + 4, edges)?;
    let e_side: Vec<VertexId> = (n..=n + m).collect();
    let mut v_side: Vec<VertexId> = (0..n).collect();
    v_side.push(u_prime);
    let pendants: Vec<VertexId> = (n + m + 1..u_prime).chain(u_prime + 1..u_prime + 4).collect();
    Ok((
        h,
        KlPartition {
            stables: vec![pendants],
            cliques: vec![e_side, v_side],
        },
    ))
}

/// 4-tessellation cover of `c5_chordal21(g)` from a proper 3-colouring of
/// `g`. Tessellation `i < 3` holds `{v} ∪ E(v)` for every `v` of colour
/// `i`; tessellation 3 holds `E(g) ∪ {u}`; pendant edges fill the three
/// tessellations where their hub is free.
pub fn c5_cover_from_coloring(g: &Graph, coloring: &VertexColoring) -> Result<TessellationCover> {
    check_vertex_coloring(g, &coloring.colors)?;
    let mut palette = coloring.colors.clone();
    palette.sort_unstable();
    palette.dedup();
    if palette.len() > 3 {
        return Err(Error::ImproperColoring(format!("{} colours, need at most 3", palette.len())));
    }
    let color = |v: VertexId| palette.binary_search(&coloring.colors[v]).unwrap();
    let (n, m) = (g.n(), g.m());
    let u = n + m;
    let pendant = |v: VertexId, i: usize| u + 1 + 3 * v + i;
    let mut parts: Vec<Vec<Vec<VertexId>>> = vec![Vec::new(); 4];
    parts[3].push((n..=u).collect());
    for v in 0..n {
        let mut clique = vec![v];
        clique.extend(g.incident_edges(v).iter().map(|&e| n + e));
        parts[color(v)].push(clique);
        let free = (0..4).filter(|&t| t != color(v));
        for (i, t) in free.enumerate() {
            parts[t].push(vec![v, pendant(v, i)]);
        }
    }
    for t in 0..3 {
        parts[t].push(vec![u, pendant(n, t)]);
    }
    Ok(TessellationCover::new(parts.into_iter().map(Tessellation::new).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::graph::{is_chordal, verify_kl_partition};
    use crate::tessellation::validate_cover;

    #[test]
    fn c5_sizes() {
        let (h, p) = c5_chordal21(&complete(3)).unwrap();
        assert_eq!(h.n(), 19);
        assert!(is_chordal(&h));
        assert!(verify_kl_partition(&h, &p.stables, &p.cliques).unwrap());
        assert_eq!(c5_chordal21(&cycle(5)).unwrap().0.n(), 29);
        assert!(c5_chordal21(&cycle(4)).is_err());
    }

    #[test]
    fn c6_sizes() {
        let (h, p) = c6_12graph(&complete(3)).unwrap();
        assert_eq!(h.n(), 20);
        assert!(verify_kl_partition(&h, &p.stables, &p.cliques).unwrap());
        assert!(c6_12graph(&cycle(4)).is_err());
    }

    #[test]
    fn cover_from_three_colouring() {
        for g in [complete(3), cycle(5), petersen()] {
            let col = crate::coloring::exact_chromatic_number(&g, 1_000_000).solved().unwrap();
            let (h, _) = c5_chordal21(&g).unwrap();
            let cover = c5_cover_from_coloring(&g, &col).unwrap();
            assert_eq!(cover.len(), 4);
            validate_cover(&h, &cover).unwrap();
        }
    }
}
