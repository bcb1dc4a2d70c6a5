//! Upper bounds on the tessellation number from edge and clique-graph
//! colourings, cheap lower bounds, and the exact value for triangle-free
//! graphs.

use serde::Serialize;

use crate::clique_graph::clique_graph_with_cap;
use crate::coloring::{
    edge_coloring_delta_plus_one, exact_chromatic_index, exact_chromatic_number,
    greedy_vertex_coloring, Exact,
};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, is_cluster_graph, is_triangle_free, Graph, DEFAULT_CLIQUE_CAP};
use crate::tessellation::{cover_from_edge_coloring, cover_from_kg_coloring, validate_cover, TessellationCover};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub lower: usize,
    /// Colours in the edge colouring behind `edge_cover`.
    pub upper_edge: usize,
    /// True when `upper_edge` is proven equal to the chromatic index.
    pub upper_edge_exact: bool,
    /// Colours in the `K(G)` colouring behind `kg_cover`.
    pub upper_kg: usize,
    /// True when `upper_kg` is proven equal to `χ(K(G))`.
    pub upper_kg_exact: bool,
    pub upper: usize,
    pub edge_cover: TessellationCover,
    pub kg_cover: TessellationCover,
}

/// Closed interval known to contain a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bracket {
    pub lower: usize,
    pub upper: usize,
}

impl Bracket {
    pub fn exact(value: usize) -> Self {
        Bracket { lower: value, upper: value }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn value(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }
}

pub fn upper_bounds(g: &Graph, exact: bool, budget: u64) -> Result<BoundsReport> {
    upper_bounds_with_cap(g, exact, budget, DEFAULT_CLIQUE_CAP)
}

/// Both covers are built from colourings and validated before returning.
/// Without `exact` the colourings are Misra–Gries and greedy smallest-last,
/// and the exactness flags report only what is provable for free (bipartite
/// graphs, or a count matching a trivial lower bound).
pub fn upper_bounds_with_cap(g: &Graph, exact: bool, budget: u64, cap: usize) -> Result<BoundsReport> {
    let kg = clique_graph_with_cap(g, cap)?;
    let delta = g.max_degree();

    let (edge_coloring, upper_edge_exact) = if exact {
        match exact_chromatic_index(g, budget) {
            Exact::Solved(c) => (c, true),
            Exact::Unknown(c) => (c.unwrap_or_else(|| edge_coloring_delta_plus_one(g)), false),
        }
    } else {
        let c = edge_coloring_delta_plus_one(g);
        let proven = c.count == delta;
        (c, proven)
    };

    let (kg_coloring, upper_kg_exact) = if exact {
        match exact_chromatic_number(&kg.kg, budget) {
            Exact::Solved(c) => (c, true),
            Exact::Unknown(c) => (c.unwrap_or_else(|| greedy_vertex_coloring(&kg.kg)), false),
        }
    } else {
        let c = greedy_vertex_coloring(&kg.kg);
        let proven = c.count <= 1 || (c.count == 2 && kg.kg.m() > 0);
        (c, proven)
    };

    let edge_cover = cover_from_edge_coloring(g, &edge_coloring)?;
    let kg_cover = cover_from_kg_coloring(g, &kg, &kg_coloring)?;
    validate_cover(g, &edge_cover).map_err(Error::Invalid)?;

    let upper_edge = edge_coloring.count;
    let upper_kg = kg_coloring.count;
    Ok(BoundsReport {
        lower: lower_bound_with_cap(g, cap)?,
        upper_edge,
        upper_edge_exact,
        upper_kg,
        upper_kg_exact,
        upper: upper_edge.min(upper_kg),
        edge_cover,
        kg_cover,
    })
}

pub fn lower_bound(g: &Graph) -> Result<usize> {
    lower_bound_with_cap(g, DEFAULT_CLIQUE_CAP)
}

/// 0 for edgeless, 1 for cluster graphs, otherwise 2 or 3 by bipartiteness
/// of `K(G)`. On triangle-free graphs every edge at a maximum-degree vertex
/// is a maximal clique, and no tessellation holds two of them, so `Δ` is
/// also a lower bound.
pub fn lower_bound_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    let base = if g.m() == 0 {
        0
    } else if is_cluster_graph(g) {
        1
    } else if is_bipartite(&clique_graph_with_cap(g, cap)?.kg).is_some() {
        2
    } else {
        3
    };
    Ok(if is_triangle_free(g) { base.max(g.max_degree()) } else { base })
}

/// On triangle-free graphs the tessellation number equals the chromatic
/// index. Returns the `[Δ, Δ+1]` bracket if the search budget runs out.
pub fn triangle_free_tessellation_number(g: &Graph, budget: u64) -> Result<Bracket> {
    if !is_triangle_free(g) {
        return Err(Error::precondition("graph contains a triangle"));
    }
    Ok(match exact_chromatic_index(g, budget) {
        Exact::Solved(c) => Bracket::exact(c.count),
        Exact::Unknown(_) => Bracket {
            lower: g.max_degree(),
            upper: g.max_degree() + 1,
        },
    })
}
