use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Clique, EdgeId, Graph, VertexId};
use crate::solver::{cover_avoiding, is_t_tessellable, Decision, SolveOptions};

/// A replacement gadget: a host graph with a middle triangle and external
/// triangles, each external triangle offering two attachment vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetSpec {
    pub graph: Graph,
    pub middle_triangle: Clique,
    pub external_triangles: Vec<Clique>,
    /// `attachment_vertices[i]` lies on `external_triangles[i]`.
    pub attachment_vertices: Vec<(VertexId, VertexId)>,
}

impl GadgetSpec {
    pub fn check(&self) -> Result<()> {
        let g = &self.graph;
        for t in std::iter::once(&self.middle_triangle).chain(&self.external_triangles) {
            if t.len() != 3 || t.vertices().iter().any(|&v| v >= g.n()) || !g.is_clique(t.vertices()) {
                return Err(Error::precondition(format!("{:?} is not a triangle", t.vertices())));
            }
        }
        if self.attachment_vertices.len() != self.external_triangles.len() {
            return Err(Error::precondition("one attachment pair per external triangle"));
        }
        for (t, &(a, b)) in self.external_triangles.iter().zip(&self.attachment_vertices) {
            if a == b || !t.contains(a) || !t.contains(b) {
                return Err(Error::precondition(format!(
                    "attachment pair ({a}, {b}) is not on triangle {:?}",
                    t.vertices()
                )));
            }
        }
        Ok(())
    }

    fn triangle_edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = std::iter::once(&self.middle_triangle)
            .chain(&self.external_triangles)
            .flat_map(|t| t.pairs())
            .map(|(u, v)| self.graph.edge_id(u, v).unwrap())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// True when every cover of the gadget with at most three tessellations has
/// one tessellation containing the middle triangle and all external
/// triangles. `None` if a search runs out of budget.
///
/// Such a tessellation fails exactly when it misses one of the triangle
/// edges, so a counterexample is a 3-cover drawn from the catalogues of the
/// gadget with one triangle edge deleted.
pub fn verify_gadget(spec: &GadgetSpec, opts: &SolveOptions) -> Result<Option<bool>> {
    spec.check()?;
    match is_t_tessellable(&spec.graph, 3, opts) {
        Decision::Yes(_) => {}
        Decision::No => return Err(Error::precondition("gadget is not 3-tessellable")),
        Decision::Unknown => return Ok(None),
    }
    let rows: Vec<Vec<EdgeId>> = spec.triangle_edges().into_iter().map(|e| vec![e]).collect();
    Ok(cover_avoiding(&spec.graph, 3, &rows, opts)?.map(|found| found.is_none()))
}

/// One gadget copy per vertex of `g`; copy `v` occupies raw ids
/// `v*s .. (v+1)*s`. For each edge `uv` in edge order, the attachment pair
/// of the lowest unused external triangle of `u`'s copy is identified with
/// that of `v`'s copy (first with first, second with second). Merged
/// vertices are renumbered by their smallest raw id.
pub fn c3_gadget_replace(g: &Graph, spec: &GadgetSpec) -> Result<Graph> {
    spec.check()?;
    let s = spec.graph.n();
    let slots = spec.external_triangles.len();
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > slots) {
        return Err(Error::precondition(format!(
            "vertex {v} has degree {} but the gadget has {slots} external triangles",
            g.degree(v)
        )));
    }
    let mut parent: Vec<usize> = (0..g.n() * s).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        p[hi] = lo;
    };
    let mut used = vec![0usize; g.n()];
    for &(u, v) in g.edges() {
        let (a, b) = spec.attachment_vertices[used[u]];
        let (c, d) = spec.attachment_vertices[used[v]];
        used[u] += 1;
        used[v] += 1;
        union(&mut parent, u * s + a, v * s + c);
        union(&mut parent, u * s + b, v * s + d);
    }
    // Roots are the smallest raw id of each class, so ranking roots
    // numbers classes by their smallest member.
    let roots: Vec<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
    let mut label = vec![usize::MAX; roots.len()];
    let mut next = 0;
    for x in 0..roots.len() {
        if roots[x] == x {
            label[x] = next;
            next += 1;
        }
    }
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for v in g.vertices() {
        for &(a, b) in spec.graph.edges() {
            let (x, y) = (label[roots[v * s + a]], label[roots[v * s + b]]);
            if x != y {
                edges.push((x.min(y), x.max(y)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(next, edges)
}
