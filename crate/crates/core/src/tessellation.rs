//! Tessellations (vertex partitions into cliques) and tessellation covers.
//!
//! One-vertex cliques are never stored: any vertex not listed in a
//! tessellation is an implicit singleton.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clique_graph::CliqueGraphResult;
use crate::coloring::{EdgeColoring, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, Clique, EdgeId, Graph, VertexId};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tessellation {
    cliques: Vec<Clique>,
}

impl Tessellation {
    /// Normalises the clique lists (sorted, singletons dropped). No
    /// validation against a host graph happens here.
    pub fn new<I, C>(cliques: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Clique>,
    {
        let mut cliques: Vec<Clique> = cliques
            .into_iter()
            .map(Into::into)
            .filter(|c| c.len() >= 2)
            .collect();
        cliques.sort_unstable();
        Tessellation { cliques }
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// `owner[v]` is the index of the stored clique holding `v`.
    fn owners(&self, n: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; n];
        for (i, c) in self.cliques.iter().enumerate() {
            for &v in c.vertices() {
                if v < n {
                    owner[v] = Some(i);
                }
            }
        }
        owner
    }

    /// True when every vertex of `vertices` sits in one stored clique.
    pub fn contains_clique(&self, vertices: &[VertexId]) -> bool {
        match vertices {
            [] | [_] => true,
            [first, rest @ ..] => self
                .cliques
                .iter()
                .find(|c| c.contains(*first))
                .is_some_and(|c| rest.iter().all(|&v| c.contains(v))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TessellationCover {
    tessellations: Vec<Tessellation>,
}

impl TessellationCover {
    pub fn new(tessellations: Vec<Tessellation>) -> Self {
        TessellationCover { tessellations }
    }

    pub fn tessellations(&self) -> &[Tessellation] {
        &self.tessellations
    }

    pub fn len(&self) -> usize {
        self.tessellations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tessellations.is_empty()
    }

    pub fn into_inner(self) -> Vec<Tessellation> {
        self.tessellations
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    VertexOutOfRange { tessellation: usize, vertex: VertexId },
    Overlap { tessellation: usize, vertex: VertexId },
    NotClique { tessellation: usize, u: VertexId, v: VertexId },
    Uncovered { u: VertexId, v: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { tessellation, vertex } => {
                write!(f, "tessellation {tessellation}: vertex {vertex} out of range")
            }
            Violation::Overlap { tessellation, vertex } => {
                write!(f, "tessellation {tessellation}: vertex {vertex} lies in two cliques")
            }
            Violation::NotClique { tessellation, u, v } => {
                write!(f, "tessellation {tessellation}: missing edge {u}-{v}")
            }
            Violation::Uncovered { u, v } => write!(f, "edge {u}-{v} is not covered"),
        }
    }
}

/// Every violation found, in discovery order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn first(&self) -> &Violation {
        &self.violations[0]
    }

    pub fn uncovered(&self) -> Vec<(VertexId, VertexId)> {
        self.violations
            .iter()
            .filter_map(|v| match *v {
                Violation::Uncovered { u, v } => Some((u, v)),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.first())?;
        if self.violations.len() > 1 {
            write!(f, " (+{} more)", self.violations.len() - 1)?;
        }
        Ok(())
    }
}

fn check_tessellation(g: &Graph, index: usize, t: &Tessellation, out: &mut Vec<Violation>) {
    let mut used = vec![false; g.n()];
    for c in t.cliques() {
        for &v in c.vertices() {
            if v >= g.n() {
                out.push(Violation::VertexOutOfRange { tessellation: index, vertex: v });
            } else if std::mem::replace(&mut used[v], true) {
                out.push(Violation::Overlap { tessellation: index, vertex: v });
            }
        }
        for (u, v) in c.pairs() {
            if u < g.n() && v < g.n() && !g.has_edge(u, v) {
                out.push(Violation::NotClique { tessellation: index, u, v });
            }
        }
    }
}

pub fn validate_tessellation(g: &Graph, t: &Tessellation) -> Result<(), ViolationReport> {
    let mut violations = Vec::new();
    check_tessellation(g, 0, t, &mut violations);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ViolationReport { violations })
    }
}

/// Ids of the edges belonging to a tessellation, sorted.
pub(crate) fn tessellation_edge_ids(g: &Graph, t: &Tessellation) -> Vec<EdgeId> {
    let mut ids: Vec<EdgeId> = t
        .cliques()
        .iter()
        .flat_map(|c| c.pairs())
        .filter_map(|(u, v)| g.edge_id(u, v))
        .collect();
    ids.sort_unstable();
    ids
}

/// Edges with both endpoints in one clique of `t`.
pub fn tessellation_edges(g: &Graph, t: &Tessellation) -> Result<Vec<(VertexId, VertexId)>> {
    validate_tessellation(g, t).map_err(Error::Invalid)?;
    Ok(tessellation_edge_ids(g, t)
        .into_iter()
        .map(|e| g.edges()[e])
        .collect())
}

/// Checks every tessellation and that together they cover `E(g)`.
pub fn validate_cover(g: &Graph, c: &TessellationCover) -> Result<(), ViolationReport> {
    let mut violations = Vec::new();
    let mut covered = vec![false; g.m()];
    for (i, t) in c.tessellations().iter().enumerate() {
        check_tessellation(g, i, t, &mut violations);
        for e in tessellation_edge_ids(g, t) {
            covered[e] = true;
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !covered[e] {
            violations.push(Violation::Uncovered { u, v });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ViolationReport { violations })
    }
}

/// Maximal cliques of `g` contained in no tessellation of the cover. An
/// isolated vertex sits in every tessellation as a singleton, so it is
/// exposed only by the empty cover.
pub fn exposed_maximal_cliques(g: &Graph, c: &TessellationCover) -> Result<Vec<Clique>> {
    validate_cover(g, c).map_err(Error::Invalid)?;
    let owners: Vec<Vec<Option<usize>>> = c.tessellations().iter().map(|t| t.owners(g.n())).collect();
    Ok(maximal_cliques(g)?
        .into_iter()
        .filter(|k| match k.len() {
            1 => c.is_empty(),
            _ => !owners.iter().any(|o| covers(o, k)),
        })
        .collect())
}

fn covers(owner: &[Option<usize>], k: &Clique) -> bool {
    let first = owner[k.vertices()[0]];
    first.is_some() && k.vertices().iter().all(|&v| owner[v] == first)
}

/// Groups the values of a coloring into classes ordered by colour.
fn color_classes(colors: &[usize]) -> Vec<Vec<usize>> {
    let mut distinct: Vec<usize> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut classes = vec![Vec::new(); distinct.len()];
    for (item, c) in colors.iter().enumerate() {
        classes[distinct.binary_search(c).unwrap()].push(item);
    }
    classes
}

/// One tessellation of 2-cliques per edge colour class.
pub fn cover_from_edge_coloring(g: &Graph, coloring: &EdgeColoring) -> Result<TessellationCover> {
    if coloring.colors.len() != g.m() {
        return Err(Error::ImproperColoring(format!(
            "{} edge colours for {} edges",
            coloring.colors.len(),
            g.m()
        )));
    }
    crate::coloring::check_edge_coloring(g, &coloring.colors)?;
    let tessellations = color_classes(&coloring.colors)
        .into_iter()
        .map(|class| {
            Tessellation::new(class.into_iter().map(|e| {
                let (u, v) = g.edges()[e];
                vec![u, v]
            }))
        })
        .collect();
    Ok(TessellationCover::new(tessellations))
}

/// One tessellation per colour of `K(g)`, holding the maximal cliques of that
/// colour. Same-coloured cliques are non-adjacent in `K(g)`, hence disjoint.
pub fn cover_from_kg_coloring(
    g: &Graph,
    kg: &CliqueGraphResult,
    coloring: &VertexColoring,
) -> Result<TessellationCover> {
    if coloring.colors.len() != kg.kg.n() {
        return Err(Error::ImproperColoring(format!(
            "{} colours for {} clique-graph vertices",
            coloring.colors.len(),
            kg.kg.n()
        )));
    }
    crate::coloring::check_vertex_coloring(&kg.kg, &coloring.colors)?;
    let cover = TessellationCover::new(
        color_classes(&coloring.colors)
            .into_iter()
            .map(|class| Tessellation::new(class.into_iter().map(|i| kg.cliques[i].clone())))
            .collect(),
    );
    validate_cover(g, &cover).map_err(Error::Invalid)?;
    Ok(cover)
}
