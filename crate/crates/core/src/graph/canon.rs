use super::{Graph, VertexId};

/// Isomorphism-invariant certificate: the lexicographically smallest
/// adjacency bit matrix over the leaves of an individualisation–refinement
/// search tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    /// Rebuilds the canonically labelled graph.
    pub fn to_graph(&self) -> Graph {
        let words = self.n.div_ceil(64).max(1);
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.rows[i * words + j / 64] >> (j % 64) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges_dedup(self.n, edges)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let colors = refine(g, vec![0; g.n()]);
    let mut best: Option<Vec<u64>> = None;
    search(g, colors, &mut best);
    CanonicalForm {
        n: g.n(),
        rows: best.unwrap_or_default(),
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

/// Colour refinement to the coarsest equitable partition finer than
/// `colors`. Colour names are ranks of label-independent signatures.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let mut count = distinct(&colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, VertexId)> = g
            .vertices()
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0; g.n()];
        let mut rank = 0;
        for i in 0..sigs.len() {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let new_count = if sigs.is_empty() { 0 } else { rank + 1 };
        colors = next;
        if new_count == count {
            return colors;
        }
        count = new_count;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let n = g.n();
    // Smallest colour that is shared by more than one vertex.
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| size[c] > 1) else {
        let cert = certificate(g, &colors);
        if best.as_ref().is_none_or(|b| cert < *b) {
            *best = Some(cert);
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        // Individualise v: it sorts before the rest of its cell.
        let split: Vec<usize> = (0..n)
            .map(|u| 2 * colors[u] + usize::from(colors[u] == target && u != v))
            .collect();
        let mut keys: Vec<usize> = split.clone();
        keys.sort_unstable();
        keys.dedup();
        let relabelled = split
            .iter()
            .map(|c| keys.binary_search(c).unwrap())
            .collect();
        search(g, refine(g, relabelled), best);
    }
}

fn certificate(g: &Graph, colors: &[usize]) -> Vec<u64> {
    let n = g.n();
    let words = n.div_ceil(64).max(1);
    let mut rows = vec![0u64; n * words];
    for v in 0..n {
        let i = colors[v];
        for &w in g.neighbors(v) {
            let j = colors[w];
            rows[i * words + j / 64] |= 1 << (j % 64);
        }
    }
    rows
}
