use super::{Exact, VertexColoring};
use crate::graph::{Graph, VertexId};

/// Chromatic number by DSATUR branch and bound.
///
/// The upper bound comes from a greedy DSATUR pass, the lower bound from a
/// greedy clique; every `k` in between is settled by a colour-symmetric
/// backtracking search (a new colour is only ever the next unused index).
/// `budget` caps the total number of search nodes; running out yields
/// [`Exact::Unknown`] with the greedy witness.
pub fn exact_chromatic_number(g: &Graph, budget: u64) -> Exact<VertexColoring> {
    if g.n() == 0 {
        return Exact::Solved(VertexColoring::new(Vec::new()));
    }
    let upper = dsatur_greedy(g);
    let lower = greedy_clique_size(g);
    let mut spent = 0u64;
    for k in lower..upper.count {
        let mut s = Dsatur::new(g, k, budget - spent);
        match s.run() {
            Some(true) => return Exact::Solved(s.witness()),
            Some(false) => spent += s.nodes,
            None => return Exact::Unknown(Some(upper)),
        }
    }
    Exact::Solved(upper)
}

/// Decides `k`-colourability. `None` means the budget was exhausted.
pub fn is_k_colorable(g: &Graph, k: usize, budget: u64) -> Option<Option<VertexColoring>> {
    let mut s = Dsatur::new(g, k, budget);
    match s.run()? {
        true => Some(Some(s.witness())),
        false => Some(None),
    }
}

/// As [`is_k_colorable`], also reporting the number of search nodes used.
pub(super) fn colorable_with_nodes(g: &Graph, k: usize, budget: u64) -> (Option<Option<Vec<usize>>>, u64) {
    let mut s = Dsatur::new(g, k, budget);
    let r = s.run().map(|ok| ok.then(|| s.witness().colors));
    (r, s.nodes)
}

fn dsatur_greedy(g: &Graph) -> VertexColoring {
    let k = g.max_degree() + 1;
    let mut s = Dsatur::new(g, k, u64::MAX);
    s.greedy = true;
    let done = s.run();
    debug_assert_eq!(done, Some(true));
    s.witness()
}

/// Largest clique found by growing greedily from every vertex.
pub(crate) fn greedy_clique_size(g: &Graph) -> usize {
    let mut best = usize::from(g.n() > 0);
    for v in g.vertices() {
        if g.degree(v) < best {
            continue;
        }
        let mut cands: Vec<VertexId> = g.neighbors(v).to_vec();
        cands.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
        let mut clique = vec![v];
        for w in cands {
            if clique.iter().all(|&x| g.has_edge(x, w)) {
                clique.push(w);
            }
        }
        best = best.max(clique.len());
    }
    best
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    greedy: bool,
    color: Vec<Option<usize>>,
    /// `adjacent[v][c]`: coloured neighbours of `v` with colour `c`.
    adjacent: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize, budget: u64) -> Self {
        Dsatur {
            g,
            k,
            greedy: false,
            color: vec![None; g.n()],
            adjacent: vec![vec![0; k]; g.n()],
            saturation: vec![0; g.n()],
            nodes: 0,
            budget,
        }
    }

    fn witness(&self) -> VertexColoring {
        VertexColoring::new(self.color.iter().map(|c| c.unwrap()).collect())
    }

    fn run(&mut self) -> Option<bool> {
        if self.g.n() > 0 && self.k == 0 {
            return Some(false);
        }
        self.solve(0, 0)
    }

    fn pick(&self) -> Option<VertexId> {
        // Highest saturation, then highest degree, then lowest index.
        self.g
            .vertices()
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn assign(&mut self, v: VertexId, c: usize) {
        self.color[v] = Some(c);
        for &w in self.g.neighbors(v) {
            self.adjacent[w][c] += 1;
            if self.adjacent[w][c] == 1 {
                self.saturation[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: VertexId, c: usize) {
        self.color[v] = None;
        for &w in self.g.neighbors(v) {
            self.adjacent[w][c] -= 1;
            if self.adjacent[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn solve(&mut self, colored: usize, used: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if colored == self.g.n() {
            return Some(true);
        }
        let v = self.pick().unwrap();
        if self.saturation[v] >= self.k {
            return Some(false);
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.adjacent[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            let r = self.solve(colored + 1, used.max(c + 1));
            if self.greedy || r != Some(false) {
                return r;
            }
            self.unassign(v, c);
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique_graph::clique_graph;
    use crate::coloring::{check_vertex_coloring, mycielskian, DEFAULT_BUDGET};
    use crate::graph::generators::*;
    use proptest::prelude::*;

    fn chi(g: &Graph) -> usize {
        let c = exact_chromatic_number(g, DEFAULT_BUDGET).solved().unwrap();
        check_vertex_coloring(g, &c.colors).unwrap();
        c.count
    }

    #[test]
    fn known_values() {
        assert_eq!(chi(&cycle(5)), 3);
        assert_eq!(chi(&cycle(6)), 2);
        assert_eq!(chi(&complete(5)), 5);
        assert_eq!(chi(&petersen()), 3);
        assert_eq!(chi(&Graph::empty(3)), 1);
        assert_eq!(chi(&Graph::empty(0)), 0);
        let kc5 = clique_graph(&cycle(5)).unwrap().kg;
        assert_eq!(chi(&kc5), 3);
    }

    #[test]
    fn grotzsch_needs_four() {
        assert_eq!(chi(&mycielskian(&cycle(5))), 4);
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let g = mycielskian(&mycielskian(&cycle(5)));
        match exact_chromatic_number(&g, 10) {
            Exact::Unknown(Some(c)) => check_vertex_coloring(&g, &c.colors).unwrap(),
            other => panic!("expected unknown, got {other:?}"),
        }
    }

    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        for k in usize::from(n > 0)..=n {
            let mut colors = vec![0usize; n];
            loop {
                if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                    return k;
                }
                let mut i = 0;
                while i < n {
                    colors[i] += 1;
                    if colors[i] < k { break; }
                    colors[i] = 0;
                    i += 1;
                }
                if i == n { break; }
            }
        }
        n
    }

    proptest! {
        #[test]
        fn matches_enumeration(n in 1usize..=7, bits in proptest::collection::vec(any::<bool>(), 21)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            prop_assert_eq!(chi(&g), brute_chi(&g));
            // Monotone under edge deletion.
            if g.m() > 0 {
                prop_assert!(chi(&g.without_edges(&[0])) <= chi(&g));
            }
        }
    }
}
