//! Independent oracles shared by the integration tests. Nothing here uses
//! the library's catalog, set-cover or colouring code.

#![allow(dead_code)]

use tesscover::graph::Graph;

/// Tessellation number by labelling edges with non-empty label sets such
/// that every label class is a disjoint union of complete subgraphs, i.e.
/// has no induced path on three vertices inside the class.
pub fn naive_t_number(g: &Graph) -> usize {
    if g.m() == 0 {
        return 0;
    }
    (1..).find(|&k| naive_k_labelable(g, k)).unwrap()
}

pub fn naive_k_labelable(g: &Graph, k: usize) -> bool {
    assert!(k <= 8);
    let n = g.n();
    let mut id = vec![vec![usize::MAX; n]; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        id[u][v] = e;
        id[v][u] = e;
    }
    let mut s = Labeler {
        g,
        id,
        labels: vec![0u8; g.m()],
        k,
    };
    s.assign(0, 0)
}

struct Labeler<'a> {
    g: &'a Graph,
    id: Vec<Vec<usize>>,
    labels: Vec<u8>,
    k: usize,
}

impl Labeler<'_> {
    /// Labels `used` and above have not appeared yet; new labels must be
    /// introduced lowest first, which removes label permutations.
    fn assign(&mut self, e: usize, used: usize) -> bool {
        if e == self.g.m() {
            return true;
        }
        let full = (1u16 << self.k) - 1;
        for mask in 1..=full {
            let fresh = mask >> used;
            // Fresh labels must form a prefix of the unused ones.
            if fresh & (fresh + 1) != 0 {
                continue;
            }
            let next_used = used + fresh.count_ones() as usize;
            self.labels[e] = mask as u8;
            if self.consistent(e) && self.assign(e + 1, next_used) {
                return true;
            }
        }
        self.labels[e] = 0;
        false
    }

    /// Checks every triangle of vertex triples through the edge just set.
    fn consistent(&self, e: usize) -> bool {
        let (a, b) = self.g.edges()[e];
        for w in 0..self.g.n() {
            if w == a || w == b {
                continue;
            }
            let state = |x: usize, y: usize| -> Option<u8> {
                let i = self.id[x][y];
                if i == usize::MAX {
                    Some(0)
                } else if self.labels[i] == 0 {
                    None
                } else {
                    Some(self.labels[i])
                }
            };
            let sides = [Some(self.labels[e]), state(a, w), state(b, w)];
            for bit in 0..self.k {
                let with = sides.iter().filter(|s| matches!(s, Some(m) if m >> bit & 1 == 1)).count();
                let without = sides.iter().filter(|s| matches!(s, Some(m) if m >> bit & 1 == 0)).count();
                if with == 2 && without == 1 {
                    return false;
                }
            }
        }
        true
    }
}

/// Chromatic number by trying every assignment with colours introduced in
/// order.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    (usize::from(n > 0)..=n)
        .find(|&k| {
            let mut col = vec![usize::MAX; n];
            color_from(g, 0, k, 0, &mut col)
        })
        .unwrap()
}

fn color_from(g: &Graph, v: usize, k: usize, used: usize, col: &mut [usize]) -> bool {
    if v == g.n() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| col[w] != c) {
            col[v] = c;
            if color_from(g, v + 1, k, used.max(c + 1), col) {
                return true;
            }
        }
    }
    col[v] = usize::MAX;
    false
}

/// Chromatic index as the chromatic number of the line graph, built here
/// from scratch.
pub fn brute_chromatic_index(g: &Graph) -> usize {
    let m = g.m();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = g.edges()[i];
            let (c, d) = g.edges()[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    brute_chromatic_number(&Graph::from_edges(m, edges).unwrap())
}

/// Maximal cliques by checking every vertex subset.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 16);
    let is_clique = |mask: u32| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        g.is_clique(&vs)
    };
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        if is_clique(mask) && (0..n).all(|v| mask >> v & 1 == 1 || !is_clique(mask | 1 << v)) {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// `K(G)` bipartite, decided from brute-force cliques.
pub fn brute_kg_bipartite(g: &Graph) -> bool {
    let cl = brute_maximal_cliques(g);
    let k = cl.len();
    let mut side = vec![usize::MAX; k];
    let meets = |i: usize, j: usize| cl[i].iter().any(|v| cl[j].contains(v));
    for s in 0..k {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if i != j && meets(i, j) {
                    if side[j] == usize::MAX {
                        side[j] = 1 - side[i];
                        stack.push(j);
                    } else if side[j] == side[i] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Small named graphs used across test files.
pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}
