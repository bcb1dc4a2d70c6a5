//! Exact tessellation number by set covering over the catalog of
//! edge-maximal tessellations, plus a greedy heuristic and checkers for
//! structural properties of minimum covers.

mod catalog;
mod setcover;

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::bounds::lower_bound_with_cap;
use crate::coloring::{edge_coloring_delta_plus_one, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{maximal_cliques_with_cap, Clique, EdgeId, Graph, VertexId, DEFAULT_CLIQUE_CAP};
use crate::tessellation::{cover_from_edge_coloring, Tessellation, TessellationCover};

pub use catalog::{enumerate_tessellations, TessellationCatalog, DEFAULT_CATALOG_CAP};
use setcover::SetCover;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Search-node budget shared by all set-cover searches of one call.
    pub budget: u64,
    pub catalog_cap: usize,
    pub clique_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: DEFAULT_BUDGET,
            catalog_cap: DEFAULT_CATALOG_CAP,
            clique_cap: DEFAULT_CLIQUE_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub catalog_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub t_number: usize,
    pub cover: TessellationCover,
    /// True when no smaller cover exists.
    pub optimal: bool,
    /// Best proven lower bound (equal to `t_number` when optimal).
    pub lower: usize,
    pub stats: SolveStats,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes(TessellationCover),
    No,
    Unknown,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

/// Minimum cover. Candidate sizes are tried upwards from the lower bound,
/// so the reported cover is the first one met in catalog order at the
/// optimal size. When the catalog cannot be built or the budget runs out,
/// the best heuristic cover is returned with `optimal = false`.
pub fn min_cover_exact(g: &Graph, opts: &SolveOptions) -> SolveResult {
    let heuristic = best_heuristic(g);
    let lower = lower_bound_with_cap(g, opts.clique_cap).unwrap_or(usize::from(g.m() > 0));
    let fallback = |nodes, catalog_size, lower: usize| SolveResult {
        t_number: heuristic.len(),
        cover: heuristic.clone(),
        optimal: heuristic.len() <= lower,
        lower: lower.min(heuristic.len()),
        stats: SolveStats { nodes, catalog_size },
    };
    if g.m() == 0 {
        return fallback(0, 0, 0);
    }
    let Ok(catalog) = enumerate_tessellations(g, opts.catalog_cap) else {
        return fallback(0, 0, lower);
    };
    let target = full(g.m());
    let lb = edge_lower_bound(g);
    let mut sc = SetCover::new(g.m(), &catalog.edge_sets, opts.budget).with_lower_bound(&lb);
    for k in lower..=heuristic.len() {
        match sc.decide(&target, k) {
            Some(Some(chosen)) => {
                return SolveResult {
                    t_number: chosen.len(),
                    cover: pick(&catalog, &chosen),
                    optimal: true,
                    lower: chosen.len(),
                    stats: SolveStats { nodes: sc.nodes, catalog_size: catalog.len() },
                }
            }
            Some(None) => {}
            None => return fallback(sc.nodes, catalog.len(), k),
        }
    }
    unreachable!("the catalog always covers at the heuristic size")
}

/// Is there a cover with at most `t` tessellations?
pub fn is_t_tessellable(g: &Graph, t: usize, opts: &SolveOptions) -> Decision {
    if g.m() == 0 {
        return Decision::Yes(TessellationCover::default());
    }
    let heuristic = best_heuristic(g);
    if heuristic.len() <= t {
        return Decision::Yes(heuristic);
    }
    let lower = lower_bound_with_cap(g, opts.clique_cap).unwrap_or(1);
    if lower > t {
        return Decision::No;
    }
    let Ok(catalog) = enumerate_tessellations(g, opts.catalog_cap) else {
        return Decision::Unknown;
    };
    let lb = edge_lower_bound(g);
    let mut sc = SetCover::new(g.m(), &catalog.edge_sets, opts.budget).with_lower_bound(&lb);
    match sc.decide(&full(g.m()), t) {
        Some(Some(chosen)) => Decision::Yes(pick(&catalog, &chosen)),
        Some(None) => Decision::No,
        None => Decision::Unknown,
    }
}

/// Builds tessellations one pass at a time until every edge is covered.
/// A pass scans the vertices in order; each vertex not yet placed in the
/// pass starts a clique that repeatedly absorbs the unplaced common
/// neighbour adding the most uncovered edges (lowest index on ties), until
/// no candidate adds any.
pub fn greedy_cover(g: &Graph) -> TessellationCover {
    let mut covered = vec![false; g.m()];
    let mut remaining = g.m();
    let mut out = Vec::new();
    while remaining > 0 {
        let mut placed = vec![false; g.n()];
        let mut cliques = Vec::new();
        for v in g.vertices() {
            if placed[v] {
                continue;
            }
            let mut clique = vec![v];
            loop {
                let best = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| !placed[w] && !clique.contains(&w))
                    .filter(|&w| clique.iter().all(|&x| g.has_edge(x, w)))
                    .map(|w| {
                        let gain = clique
                            .iter()
                            .filter(|&&x| !covered[g.edge_id(x, w).unwrap()])
                            .count();
                        (gain, w)
                    })
                    .max_by_key(|&(gain, w)| (gain, std::cmp::Reverse(w)));
                match best {
                    Some((gain, w)) if gain > 0 => clique.push(w),
                    _ => break,
                }
            }
            if clique.len() > 1 {
                for (i, &a) in clique.iter().enumerate() {
                    placed[a] = true;
                    for &b in &clique[i + 1..] {
                        let e = g.edge_id(a, b).unwrap();
                        if !std::mem::replace(&mut covered[e], true) {
                            remaining -= 1;
                        }
                    }
                }
                cliques.push(clique);
            }
        }
        out.push(Tessellation::new(cliques));
    }
    TessellationCover::new(out)
}

/// Some minimum cover leaves no maximal clique exposed. `None` when the
/// tessellation number or the search is out of reach.
///
/// Extending a tessellation to an edge-maximal one never breaks up a
/// maximal clique it contains, so it suffices to cover the maximal cliques
/// (as elements) with `T` catalogue tessellations.
pub fn exists_min_cover_without_exposed(g: &Graph, opts: &SolveOptions) -> Option<bool> {
    let t = optimal_t(g, opts)?;
    if g.m() == 0 {
        // The only minimum cover is empty and exposes every vertex.
        return Some(g.n() == 0);
    }
    let catalog = enumerate_tessellations(g, opts.catalog_cap).ok()?;
    let cliques = nontrivial_maximal_cliques(g, opts)?;
    let sets: Vec<FixedBitSet> = catalog
        .tessellations
        .iter()
        .map(|t| {
            let mut b = FixedBitSet::with_capacity(cliques.len());
            for (i, q) in cliques.iter().enumerate() {
                if t.contains_clique(q.vertices()) {
                    b.insert(i);
                }
            }
            b
        })
        .collect();
    let lb = clique_lower_bound(g, &cliques);
    let mut sc = SetCover::new(cliques.len(), &sets, opts.budget).with_lower_bound(&lb);
    sc.decide(&full(cliques.len()), t).map(|r| r.is_some())
}

/// Every minimum cover has a tessellation containing no maximal clique of
/// size at least two. Equivalently, no cover of size `T` is built only from
/// tessellations that each contain a maximal clique; such tessellations
/// stay so when extended, so the catalogue suffices.
pub fn all_min_covers_need_cliqueless_tessellation(g: &Graph, opts: &SolveOptions) -> Option<bool> {
    let t = optimal_t(g, opts)?;
    if g.m() == 0 {
        return Some(false);
    }
    let catalog = enumerate_tessellations(g, opts.catalog_cap).ok()?;
    let cliques = nontrivial_maximal_cliques(g, opts)?;
    let sets: Vec<FixedBitSet> = catalog
        .tessellations
        .iter()
        .zip(&catalog.edge_sets)
        .filter(|(t, _)| cliques.iter().any(|q| t.contains_clique(q.vertices())))
        .map(|(_, s)| s.clone())
        .collect();
    let lb = edge_lower_bound(g);
    let mut sc = SetCover::new(g.m(), &sets, opts.budget).with_lower_bound(&lb);
    sc.decide(&full(g.m()), t).map(|r| r.is_none())
}

/// Looks for a cover with at most `k` tessellations each of which lacks at
/// least one edge from every group in some row of `avoid`. Concretely the
/// candidate tessellations are the edge-maximal tessellations of `g` minus
/// `row`, for each `row` of `avoid`; any tessellation missing those edges
/// extends to one of them without regaining them.
///
/// With one row per edge of a set of cliques this finds covers in which no
/// tessellation contains all of them; with rows taking one edge from each
/// of two cliques it finds covers exposing both.
pub fn cover_avoiding(g: &Graph, k: usize, avoid: &[Vec<EdgeId>], opts: &SolveOptions) -> Result<Option<Option<TessellationCover>>> {
    let mut pool: BTreeSet<Tessellation> = BTreeSet::new();
    for row in avoid {
        let h = g.without_edges(row);
        let c = enumerate_tessellations(&h, opts.catalog_cap)?;
        pool.extend(c.tessellations);
        if pool.len() > opts.catalog_cap {
            return Err(Error::Capacity { what: "tessellation catalog", limit: opts.catalog_cap });
        }
    }
    let catalog = TessellationCatalog::from_tessellations(g, pool.into_iter().collect());
    let lb = edge_lower_bound(g);
    let mut sc = SetCover::new(g.m(), &catalog.edge_sets, opts.budget).with_lower_bound(&lb);
    Ok(sc
        .decide(&full(g.m()), k)
        .map(|r| r.map(|chosen| pick(&catalog, &chosen))))
}

/// Is there a minimum cover in which every clique of `cliques` is exposed?
pub fn min_cover_exposing(g: &Graph, cliques: &[Clique], opts: &SolveOptions) -> Result<Option<bool>> {
    let Some(t) = optimal_t(g, opts) else {
        return Ok(None);
    };
    let mut rows: Vec<Vec<EdgeId>> = vec![Vec::new()];
    for q in cliques {
        let edges: Vec<EdgeId> = q
            .pairs()
            .map(|(u, v)| g.edge_id(u, v).ok_or_else(|| Error::precondition(format!("{u}-{v} is not an edge"))))
            .collect::<Result<_>>()?;
        rows = rows
            .iter()
            .flat_map(|r| {
                edges.iter().map(move |&e| {
                    let mut r = r.clone();
                    r.push(e);
                    r.sort_unstable();
                    r.dedup();
                    r
                })
            })
            .collect();
    }
    Ok(cover_avoiding(g, t, &rows, opts)?.map(|r| r.is_some()))
}

fn optimal_t(g: &Graph, opts: &SolveOptions) -> Option<usize> {
    let r = min_cover_exact(g, opts);
    r.optimal.then_some(r.t_number)
}

fn nontrivial_maximal_cliques(g: &Graph, opts: &SolveOptions) -> Option<Vec<Clique>> {
    let all = maximal_cliques_with_cap(g, opts.clique_cap).ok()?;
    Some(all.into_iter().filter(|q| q.len() >= 2).collect())
}

/// Smaller of the greedy cover and the Misra–Gries edge-colouring cover.
fn best_heuristic(g: &Graph) -> TessellationCover {
    let greedy = greedy_cover(g);
    let edge = cover_from_edge_coloring(g, &edge_coloring_delta_plus_one(g)).expect("proper colouring");
    if edge.len() < greedy.len() {
        edge
    } else {
        greedy
    }
}

fn pick(catalog: &TessellationCatalog, chosen: &[usize]) -> TessellationCover {
    let mut ts: Vec<Tessellation> = chosen.iter().map(|&i| catalog.tessellations[i].clone()).collect();
    ts.sort();
    TessellationCover::new(ts)
}

fn full(n: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.insert_range(..);
    b
}

/// At each vertex, uncovered edges to non-adjacent neighbours need distinct
/// tessellations; a greedy independent set among those neighbours bounds
/// the count from below.
fn edge_lower_bound(g: &Graph) -> impl Fn(&FixedBitSet) -> usize + '_ {
    move |uncovered: &FixedBitSet| {
        let mut best = 0;
        let mut picked: Vec<VertexId> = Vec::new();
        for v in g.vertices() {
            if g.degree(v) <= best {
                continue;
            }
            picked.clear();
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident_edges(v)) {
                if uncovered.contains(e) && picked.iter().all(|&x| !g.has_edge(x, w)) {
                    picked.push(w);
                }
            }
            best = best.max(picked.len());
        }
        best
    }
}

/// A tessellation puts each vertex in one part, so it contains at most one
/// maximal clique through any vertex.
fn clique_lower_bound<'a>(g: &Graph, cliques: &'a [Clique]) -> impl Fn(&FixedBitSet) -> usize + 'a {
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, q) in cliques.iter().enumerate() {
        for &v in q.vertices() {
            through[v].push(i);
        }
    }
    move |uncovered: &FixedBitSet| {
        through
            .iter()
            .map(|list| list.iter().filter(|&&i| uncovered.contains(i)).count())
            .max()
            .unwrap_or(0)
    }
}
