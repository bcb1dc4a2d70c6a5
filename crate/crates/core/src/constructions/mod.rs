//! Instance generators for the hardness reductions and extremal examples,
//! each with a fixed vertex numbering so outputs are reproducible.

mod chordal;
mod gadget;
mod nae;

use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, Graph, VertexId};

pub use chordal::{c5_chordal21, c5_cover_from_coloring, c6_12graph, KlPartition};
pub use gadget::{c3_gadget_replace, verify_gadget, GadgetSpec};
pub use nae::{c7_nae_to_kg, c8_kg_to_graph, nae_brute_force, Literal, NaeInstance};

/// Attaches a star with `chi_prime` leaves, one of which is the lowest
/// minimum-degree vertex `v` of `g`.
///
/// Layout: `g` keeps `0..n`, the centre is `n`, the new leaves are
/// `n+1 ..= n+chi_prime-1`.
pub fn c1_add_star(g: &Graph, chi_prime: usize) -> Result<Graph> {
    if chi_prime < 1 {
        return Err(Error::precondition("chi_prime must be at least 1"));
    }
    let n = g.n();
    let v = g
        .vertices()
        .min_by_key(|&v| (g.degree(v), v))
        .ok_or_else(|| Error::precondition("graph has no vertices"))?;
    let mut edges = g.edges().to_vec();
    edges.push((v, n));
    edges.extend((1..chi_prime).map(|i| (n, n + i)));
    Graph::from_edges(n + chi_prime, edges)
}

/// Adds pendants `n, n+1, ...` to `v` until `v` lies in `chi_kg` maximal
/// cliques.
pub fn c2_add_pendants(g: &Graph, v: VertexId, chi_kg: usize) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::precondition(format!("vertex {v} out of range")));
    }
    let count = |h: &Graph| -> Result<usize> {
        Ok(maximal_cliques(h)?.iter().filter(|c| c.contains(v)).count())
    };
    let mut h = g.clone();
    while count(&h)? < chi_kg {
        let mut edges = h.edges().to_vec();
        edges.push((v, h.n()));
        h = Graph::from_edges(h.n() + 1, edges)?;
    }
    Ok(h)
}

/// Pins the tessellation number to `t` around the vertex set `f`.
///
/// Layout: `g` keeps `0..n`; `U` follows (`u_j` for the `j`-th smallest
/// vertex of `f`), then `c1, c2, c3`, then the `w_{j,l}` (`j`-major,
/// `l < t-3`), then pendants: `t-1` for each `c_i` in order, then `t-1`
/// for each `w` in order.
pub fn c4_fixed_t(g: &Graph, f: &[VertexId], t: usize) -> Result<Graph> {
    if t < 4 {
        return Err(Error::precondition("t must be at least 4"));
    }
    let mut f = f.to_vec();
    f.sort_unstable();
    f.dedup();
    if let Some(&v) = f.iter().find(|&&v| v >= g.n()) {
        return Err(Error::precondition(format!("vertex {v} out of range")));
    }
    let n = g.n();
    let k = f.len();
    let u = |j: usize| n + j;
    let c = |i: usize| n + k + i;
    let w = |j: usize, l: usize| n + k + 3 + j * (t - 3) + l;
    let mut next = n + k + 3 + k * (t - 3);
    let mut edges = g.edges().to_vec();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((u(a), u(b)));
        }
        edges.push((f[a], u(a)));
    }
    for i in 0..3 {
        edges.extend((0..k).map(|j| (c(i), u(j))));
    }
    for j in 0..k {
        for l in 0..t - 3 {
            edges.push((w(j, l), f[j]));
            edges.push((w(j, l), u(j)));
        }
    }
    let hubs: Vec<VertexId> = (0..3)
        .map(c)
        .chain((0..k).flat_map(|j| (0..t - 3).map(move |l| w(j, l))))
        .collect();
    for h in hubs {
        for _ in 0..t - 1 {
            edges.push((h, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn c1_layout() {
        let h = c1_add_star(&cycle(5), 3).unwrap();
        assert_eq!(h.n(), 8);
        assert!(h.has_edge(0, 5) && h.has_edge(5, 6) && h.has_edge(5, 7));
        let h = c1_add_star(&path(3), 2).unwrap();
        assert_eq!(h.neighbors(3), &[0, 4]);
        assert!(c1_add_star(&path(3), 0).is_err());
    }

    #[test]
    fn c2_counts() {
        assert_eq!(c2_add_pendants(&diamond(), 2, 2).unwrap().n(), 5);
        assert_eq!(c2_add_pendants(&complete(3), 0, 1).unwrap().n(), 3);
        assert_eq!(c2_add_pendants(&cycle(5), 0, 3).unwrap().n(), 6);
        assert_eq!(c2_add_pendants(&Graph::empty(1), 0, 2).unwrap().n(), 3);
    }

    #[test]
    fn c4_counts() {
        let h = c4_fixed_t(&complete(2), &[0, 1], 4).unwrap();
        assert_eq!(h.n(), 24);
        assert_eq!(c4_fixed_t(&Graph::empty(0), &[], 4).unwrap().n(), 12);
        let h = c4_fixed_t(&complete(3), &[1], 5).unwrap();
        // c1 is vertex 4: one U vertex plus four pendants.
        assert_eq!(h.degree(4), 5);
        assert!(c4_fixed_t(&complete(3), &[1], 3).is_err());
    }
}
