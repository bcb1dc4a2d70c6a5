use std::collections::VecDeque;

use crate::graph::{common_neighbors, Graph, Multigraph, VertexId};

/// Line graph of a multigraph: one vertex per edge occurrence (in
/// [`Multigraph::occurrences`] order), adjacent when they share an endpoint.
/// Parallel occurrences come out as true twins.
pub fn line_graph(h: &Multigraph) -> Graph {
    let occ: Vec<(VertexId, VertexId)> = h.occurrences().collect();
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, &(u, v)) in occ.iter().enumerate() {
        at[u].push(i);
        at[v].push(i);
    }
    let mut edges = Vec::new();
    for list in &at {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges_dedup(occ.len(), edges)
}

/// Simple root graph of a line graph. `edge_map[e]` is the vertex of the
/// input that root edge `e` stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleRoot {
    pub root: Graph,
    pub edge_map: Vec<VertexId>,
}

/// Finds a simple graph `H` with `L(H) ≅ g` by growing a Krausz partition
/// (edge-disjoint cliques, every vertex in at most two) from a seed edge.
///
/// The seed edge `vw` lies in exactly one partition clique, which is `v, w`
/// plus a subset of their common neighbours; at most two subsets are
/// possible, and each one forces the rest of the partition. When both
/// succeed the bipartite root is preferred. Components are handled one at
/// a time and an isolated vertex becomes a lone edge.
pub fn recognize_line_graph_simple(g: &Graph) -> Option<SimpleRoot> {
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(g.n());
    let mut owner = Vec::with_capacity(g.n());
    let mut offset = 0;
    for comp in g.components() {
        let r = if comp.len() == 1 {
            SimpleRoot { root: Graph::from_edges(2, [(0, 1)]).ok()?, edge_map: vec![0] }
        } else {
            recognize_connected(&g.induced_subgraph(&comp))?
        };
        for (&(a, b), &x) in r.root.edges().iter().zip(&r.edge_map) {
            edges.push((a + offset, b + offset));
            owner.push(comp[x]);
        }
        offset += r.root.n();
    }
    // Components occupy increasing vertex ranges, so sorting by edge keeps
    // each root edge next to its input vertex.
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&i| edges[i]);
    let root = Graph::from_edges(offset, order.iter().map(|&i| edges[i])).ok()?;
    let edge_map = order.iter().map(|&i| owner[i]).collect();
    Some(SimpleRoot { root, edge_map })
}

fn recognize_connected(g: &Graph) -> Option<SimpleRoot> {
    let v = g
        .vertices()
        .filter(|&v| g.degree(v) > 0)
        .min_by_key(|&v| (g.degree(v), v))?;
    let w = g.neighbors(v)[0];
    let mut found: Option<SimpleRoot> = None;
    for seed in seed_cliques(g, v, w) {
        if let Some(r) = grow(g, seed) {
            if crate::graph::is_bipartite(&r.root).is_some() {
                return Some(r);
            }
            found.get_or_insert(r);
        }
    }
    found
}

fn seed_cliques(g: &Graph, v: VertexId, w: VertexId) -> Vec<Vec<VertexId>> {
    let common = common_neighbors(g, v, w);
    let with = |extra: &[VertexId]| {
        let mut c = vec![v, w];
        c.extend_from_slice(extra);
        c.sort_unstable();
        c
    };
    if common.is_empty() {
        return vec![with(&[])];
    }
    if g.is_clique(&common) {
        return if common.len() == 1 {
            vec![with(&common), with(&[])]
        } else {
            vec![with(&common)]
        };
    }
    // Otherwise the common neighbours must be a clique plus one vertex
    // adjacent to none of it.
    let isolated: Vec<VertexId> = common
        .iter()
        .copied()
        .filter(|&t| common.iter().all(|&x| !g.has_edge(t, x)))
        .collect();
    match isolated.as_slice() {
        [a, b] if common.len() == 2 => vec![with(&[*a]), with(&[*b])],
        [t] => {
            let rest: Vec<VertexId> = common.iter().copied().filter(|x| x != t).collect();
            if g.is_clique(&rest) {
                vec![with(&rest)]
            } else {
                Vec::new()
            }
        }
        _ => Vec::new(),
    }
}

fn grow(g: &Graph, seed: Vec<VertexId>) -> Option<SimpleRoot> {
    let mut cliques: Vec<Vec<VertexId>> = Vec::new();
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut queue = VecDeque::new();
    let add = |c: Vec<VertexId>,
                   cliques: &mut Vec<Vec<VertexId>>,
                   member: &mut Vec<Vec<usize>>,
                   queue: &mut VecDeque<VertexId>|
     -> Option<()> {
        let id = cliques.len();
        for &x in &c {
            if member[x].len() == 2 {
                return None;
            }
            member[x].push(id);
            queue.push_back(x);
        }
        cliques.push(c);
        Some(())
    };
    add(seed, &mut cliques, &mut member, &mut queue)?;
    while let Some(u) = queue.pop_front() {
        let rest: Vec<VertexId> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&x| !member[u].iter().any(|&c| cliques[c].binary_search(&x).is_ok()))
            .collect();
        if rest.is_empty() {
            continue;
        }
        if member[u].len() == 2 || !g.is_clique(&rest) {
            return None;
        }
        let mut c = rest;
        c.push(u);
        c.sort_unstable();
        add(c, &mut cliques, &mut member, &mut queue)?;
    }
    // Every vertex is reached (g is connected), every edge is inside a
    // clique, and the clique sizes must account for each edge exactly once.
    if member.iter().any(Vec::is_empty) {
        return None;
    }
    let pairs: usize = cliques.iter().map(|c| c.len() * (c.len() - 1) / 2).sum();
    if pairs != g.m() {
        return None;
    }
    // Root: one vertex per clique, plus a private end for vertices in one clique.
    let mut next = cliques.len();
    let mut edges = Vec::with_capacity(g.n());
    for list in &member {
        let (a, b) = match list.as_slice() {
            [a] => {
                next += 1;
                (*a, next - 1)
            }
            [a, b] => (*a, *b),
            _ => unreachable!(),
        };
        edges.push((a.min(b), a.max(b)));
    }
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&x| edges[x]);
    if order.windows(2).any(|p| edges[p[0]] == edges[p[1]]) {
        return None;
    }
    let root = Graph::from_edges(next, order.iter().map(|&x| edges[x])).ok()?;
    let edge_map = root
        .edges()
        .iter()
        .map(|e| order[order.binary_search_by_key(e, |&x| edges[x]).unwrap()])
        .collect();
    Some(SimpleRoot { root, edge_map })
}
