//! Small named graphs used throughout tests, examples and the CLI.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
}

/// Star `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges_dedup(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// `K_4` minus the edge `{2, 3}`.
pub fn diamond() -> Graph {
    Graph::from_edges_dedup(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes `i - (i + 5)`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges_dedup(10, outer.chain(inner).chain(spokes))
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges_dedup(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Disjoint union, renumbering `h` after `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    Graph::from_edges_dedup(
        g.n() + h.n(),
        g.edges()
            .iter()
            .copied()
            .chain(h.edges().iter().map(|&(u, v)| (u + off, v + off))),
    )
}
