//! Simple undirected graphs, multigraphs and cliques.
//!
//! Vertices are dense indices in `0..n`. Adjacency lists are kept sorted so
//! that membership tests are binary searches and every derived structure
//! (edge ids, clique lists) is deterministic.

mod canon;
mod cliques;
pub mod generators;
mod predicates;
mod twins;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use cliques::{maximal_cliques, maximal_cliques_with_cap, DEFAULT_CLIQUE_CAP};
pub(crate) use cliques::degeneracy_order;
pub(crate) use predicates::common_neighbors;
pub use predicates::{
    is_bipartite, is_chordal, is_cluster_graph, is_diamond_free, is_triangle_free,
    verify_kl_partition, Bipartition,
};
pub use twins::true_twin_classes;

pub type VertexId = usize;

/// Index of an edge in [`Graph::edges`].
pub type EdgeId = usize;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    /// `adj_edge[u][i]` is the id of the edge `(u, adj[u][i])`.
    adj_edge: Vec<Vec<EdgeId>>,
    edges: Vec<(VertexId, VertexId)>,
}

/// Serialised form of a [`Graph`]: vertex count and edge list.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::from_edges(r.n, r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { n: g.n(), edges: g.edges }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            adj_edge: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a simple graph, rejecting loops, duplicates and out-of-range
    /// endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::precondition(format!(
                    "edge {i} ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::precondition(format!("edge {i} is a loop at {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::precondition(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Like [`Graph::from_edges`] but silently merges duplicate edges. Loops
    /// and out-of-range endpoints are still programming errors.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u < n && v < n && u != v, "bad edge ({u}, {v}) for n = {n}");
                (u.min(v), u.max(v))
            })
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted_unique(n, list)
    }

    fn from_sorted_unique(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut adj: Vec<Vec<VertexId>> = deg.iter().map(|&d| Vec::with_capacity(d)).collect();
        let mut adj_edge: Vec<Vec<EdgeId>> = deg.iter().map(|&d| Vec::with_capacity(d)).collect();
        // Edges are sorted by (u, v), so pushing in order leaves every
        // adjacency list sorted for the smaller endpoint. The larger endpoint
        // needs a sort afterwards.
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj_edge[u].push(id);
            adj[v].push(u);
            adj_edge[v].push(id);
        }
        for v in 0..n {
            if adj[v].windows(2).any(|w| w[0] > w[1]) {
                let mut pairs: Vec<_> = adj[v].iter().copied().zip(adj_edge[v].iter().copied()).collect();
                pairs.sort_unstable();
                adj[v] = pairs.iter().map(|p| p.0).collect();
                adj_edge[v] = pairs.iter().map(|p| p.1).collect();
            }
        }
        Graph {
            adj,
            adj_edge,
            edges,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Edge ids parallel to [`Graph::neighbors`].
    #[inline]
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.adj_edge[v]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted list of edges `(u, v)` with `u < v`; the position is the edge id.
    #[inline]
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n() {
            return None;
        }
        self.adj[u]
            .binary_search(&v)
            .ok()
            .map(|i| self.adj_edge[u][i])
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    pub fn is_clique(&self, vertices: &[VertexId]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Returns the first non-adjacent pair in `vertices`, if any.
    pub fn missing_edge(&self, vertices: &[VertexId]) -> Option<(VertexId, VertexId)> {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if !self.has_edge(u, v) {
                    return Some((u.min(v), u.max(v)));
                }
            }
        }
        None
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        // Increasing vertex lists emit edges already sorted and unique.
        if vertices.windows(2).all(|w| w[0] < w[1]) {
            Self::from_sorted_unique(vertices.len(), edges)
        } else {
            Graph::from_edges_dedup(vertices.len(), edges)
        }
    }

    /// The graph with the given edge ids deleted; vertex numbering unchanged.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let mut drop = vec![false; self.m()];
        for &e in removed {
            drop[e] = true;
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop[*i])
            .map(|(_, &e)| e)
            .collect();
        Self::from_sorted_unique(self.n(), edges)
    }
}

/// A clique stored as a sorted, duplicate-free vertex list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clique(Vec<VertexId>);

impl Clique {
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Clique(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    /// All vertex pairs `(u, v)` with `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(move |(i, &u)| self.0[i + 1..].iter().map(move |&v| (u, v)))
    }

    pub fn intersection_size(&self, other: &Clique) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }
}

impl From<Vec<VertexId>> for Clique {
    fn from(v: Vec<VertexId>) -> Self {
        Clique::new(v)
    }
}

/// One stored pair of a [`Multigraph`] together with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub multiplicity: usize,
}

/// Undirected loopless multigraph. Edge occurrences are numbered by walking
/// `edges` in order and expanding each multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<MultiEdge>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<MultiEdge>) -> Result<Self> {
        for e in &edges {
            if e.u >= n || e.v >= n {
                return Err(Error::precondition(format!(
                    "multiedge ({}, {}) outside 0..{n}",
                    e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::precondition(format!("multiedge loop at {}", e.u)));
            }
            if e.multiplicity == 0 {
                return Err(Error::precondition("multiplicity must be at least 1"));
            }
        }
        Ok(Multigraph { n, edges })
    }

    /// Collects repeated pairs from a list of occurrences, keeping first-seen
    /// order of the distinct pairs.
    pub fn from_occurrences(n: usize, occurrences: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut edges: Vec<MultiEdge> = Vec::new();
        let mut index: std::collections::HashMap<(VertexId, VertexId), usize> = Default::default();
        for &(u, v) in occurrences {
            let key = (u.min(v), u.max(v));
            match index.get(&key) {
                Some(&i) => edges[i].multiplicity += 1,
                None => {
                    index.insert(key, edges.len());
                    edges.push(MultiEdge {
                        u: key.0,
                        v: key.1,
                        multiplicity: 1,
                    });
                }
            }
        }
        Multigraph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn occurrence_count(&self) -> usize {
        self.edges.iter().map(|e| e.multiplicity).sum()
    }

    /// Endpoints of each edge occurrence, in occurrence order.
    pub fn occurrences(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .flat_map(|e| std::iter::repeat_n((e.u, e.v), e.multiplicity))
    }

    /// Underlying simple graph (multiplicities dropped).
    pub fn simple(&self) -> Graph {
        Graph::from_edges_dedup(self.n, self.edges.iter().map(|e| (e.u, e.v)))
    }
}
