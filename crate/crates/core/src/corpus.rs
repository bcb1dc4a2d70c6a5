//! Seeded test corpora: random graphs of several kinds and the complete
//! list of small connected graphs up to isomorphism.

use std::collections::HashSet;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{canonical_form, is_diamond_free, Graph, Multigraph, VertexId};
use crate::io::write_graph;
use crate::two_tess::line_graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_dedup(n, edges)
}

/// A random spanning tree plus extra edges kept whenever they close no
/// triangle. `extra` is the probability of trying each remaining pair.
pub fn random_triangle_free_connected<R: Rng>(rng: &mut R, n: usize, extra: f64) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let (u, v) = (order[i], order[rng.gen_range(0..i)]);
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut pairs: Vec<(VertexId, VertexId)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if adj[u][v] || !rng.gen_bool(extra) {
            continue;
        }
        if (0..n).any(|w| adj[u][w] && adj[v][w]) {
            continue;
        }
        adj[u][v] = true;
        adj[v][u] = true;
    }
    Graph::from_edges_dedup(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]),
    )
}

/// Bipartite multigraph on sides `0..left` and `left..left + right` with
/// `occurrences` edge copies drawn uniformly (parallel copies allowed).
pub fn random_bipartite_multigraph<R: Rng>(
    rng: &mut R,
    left: usize,
    right: usize,
    occurrences: usize,
) -> Multigraph {
    assert!(left > 0 && right > 0, "both sides need a vertex");
    let occ: Vec<(VertexId, VertexId)> = (0..occurrences)
        .map(|_| (rng.gen_range(0..left), left + rng.gen_range(0..right)))
        .collect();
    Multigraph::from_occurrences(left + right, &occ).expect("endpoints in range")
}

pub fn random_bipartite_line_graph<R: Rng>(rng: &mut R, left: usize, right: usize, occurrences: usize) -> Graph {
    line_graph(&random_bipartite_multigraph(rng, left, right, occurrences))
}

/// Adds random pairs one at a time, rejecting any that would create an
/// induced diamond, until `target_edges` edges or every pair was tried.
pub fn random_diamond_free<R: Rng>(rng: &mut R, n: usize, target_edges: usize) -> Graph {
    let mut pairs: Vec<(VertexId, VertexId)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut edges = Vec::new();
    for p in pairs {
        if edges.len() == target_edges {
            break;
        }
        edges.push(p);
        if !is_diamond_free(&Graph::from_edges_dedup(n, edges.iter().copied())) {
            edges.pop();
        }
    }
    Graph::from_edges_dedup(n, edges)
}

/// All connected graphs on `n` vertices up to isomorphism, canonically
/// labelled and sorted. Every connected graph has a vertex whose removal
/// leaves it connected, so extending the `n - 1` list by one vertex with a
/// non-empty neighbourhood reaches every class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![canonical_form(&Graph::empty(n.min(1)))];
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    for k in 2..=n {
        let mut seen = HashSet::new();
        for base in &level {
            let g = base.to_graph();
            for mask in 1u64..1 << (k - 1) {
                let extra = (0..k - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k - 1));
                let h = Graph::from_edges_dedup(k, g.edges().iter().copied().chain(extra));
                seen.insert(canonical_form(&h));
            }
        }
        level = seen.into_iter().collect();
        level.sort();
    }
    level.iter().map(|c| c.to_graph()).collect()
}

pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}

#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub er_per_density: usize,
    pub er_n: std::ops::RangeInclusive<usize>,
    pub densities: Vec<f64>,
    pub line_graphs: usize,
    pub multigraph_side: std::ops::RangeInclusive<usize>,
    pub diamond_free: usize,
    pub diamond_free_n: std::ops::RangeInclusive<usize>,
    pub small_connected_max_n: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            er_per_density: 20,
            er_n: 4..=9,
            densities: vec![0.2, 0.4, 0.6, 0.8],
            line_graphs: 50,
            multigraph_side: 2..=5,
            diamond_free: 50,
            diamond_free_n: 5..=12,
            small_connected_max_n: 7,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

/// Deterministic in `seed`; entries come out in a fixed order.
pub fn corpus_generate(seed: u64, spec: &CorpusSpec) -> Vec<CorpusEntry> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for &p in &spec.densities {
        for i in 0..spec.er_per_density {
            let n = rng.gen_range(spec.er_n.clone());
            out.push(CorpusEntry {
                name: format!("er-p{:03}-{i:04}", (p * 100.0).round() as u32),
                graph: random_graph(&mut rng, n, p),
            });
        }
    }
    for i in 0..spec.line_graphs {
        let a = rng.gen_range(spec.multigraph_side.clone());
        let b = rng.gen_range(spec.multigraph_side.clone());
        let occ = rng.gen_range(1..=a * b + 2);
        out.push(CorpusEntry {
            name: format!("line-{i:04}"),
            graph: random_bipartite_line_graph(&mut rng, a, b, occ),
        });
    }
    for i in 0..spec.diamond_free {
        let n = rng.gen_range(spec.diamond_free_n.clone());
        let target = rng.gen_range(n..=2 * n);
        out.push(CorpusEntry {
            name: format!("diamond-free-{i:04}"),
            graph: random_diamond_free(&mut rng, n, target),
        });
    }
    for n in 1..=spec.small_connected_max_n {
        for (i, g) in connected_graphs(n).into_iter().enumerate() {
            out.push(CorpusEntry {
                name: format!("connected-n{n}-{i:05}"),
                graph: g,
            });
        }
    }
    out
}

/// Writes each entry as `<name>.txt` in edge-list format.
pub fn write_corpus(dir: &Path, entries: &[CorpusEntry]) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for e in entries {
        std::fs::write(dir.join(format!("{}.txt", e.name)), write_graph(&e.graph))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_bipartite, is_triangle_free};
    use crate::two_tess::is_two_tessellable;

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(5).iter().all(Graph::is_connected));
    }

    #[test]
    fn generators_respect_their_classes() {
        let mut r = rng(7);
        for _ in 0..30 {
            let g = random_triangle_free_connected(&mut r, 8, 0.5);
            assert!(g.is_connected() && is_triangle_free(&g));
            assert!(is_diamond_free(&random_diamond_free(&mut r, 9, 14)));
            let m = random_bipartite_multigraph(&mut r, 3, 4, 9);
            assert!(is_bipartite(&m.simple()).is_some());
            assert!(is_two_tessellable(&line_graph(&m)).decision);
        }
    }

    #[test]
    fn deterministic() {
        let spec = CorpusSpec {
            small_connected_max_n: 4,
            ..CorpusSpec::default()
        };
        assert_eq!(corpus_generate(0, &spec), corpus_generate(0, &spec));
        assert_ne!(corpus_generate(0, &spec), corpus_generate(1, &spec));
    }
}
