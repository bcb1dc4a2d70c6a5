use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    fn value(&self, assignment: u64) -> bool {
        (assignment >> self.var & 1 == 1) != self.negated
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaeInstance {
    pub var_count: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl NaeInstance {
    pub fn new(var_count: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if let Some(l) = clauses.iter().flatten().find(|l| l.var >= var_count) {
            return Err(Error::precondition(format!(
                "variable {} out of range for {var_count} variables",
                l.var
            )));
        }
        Ok(NaeInstance { var_count, clauses })
    }
}

/// Exhaustive NAE satisfiability. Complementing an assignment preserves
/// NAE satisfaction, so the first variable is fixed to false.
pub fn nae_brute_force(i: &NaeInstance) -> Result<bool> {
    if i.var_count > 25 {
        return Err(Error::precondition("at most 25 variables"));
    }
    let free = i.var_count.saturating_sub(1);
    Ok((0..1u64 << free).any(|a| {
        let a = a << 1;
        i.clauses.iter().all(|c| {
            let first = c[0].value(a);
            c[1..].iter().any(|l| l.value(a) != first)
        })
    }))
}

/// Graph that is 3-colourable iff the instance is NAE-satisfiable.
///
/// Layout: `x_i = 2i`, `¬x_i = 2i+1`, apex `u = 2n`, and clause `j` owns
/// the triangle `2n+1+3j .. 2n+4+3j`, whose `k`-th vertex is joined to the
/// clause's `k`-th literal.
pub fn c7_nae_to_kg(i: &NaeInstance) -> Graph {
    let n = i.var_count;
    let lit = |l: &Literal| 2 * l.var + usize::from(l.negated);
    let u = 2 * n;
    let mut edges = Vec::new();
    for v in 0..n {
        edges.extend([(2 * v, 2 * v + 1), (2 * v, u), (2 * v + 1, u)]);
    }
    for (j, c) in i.clauses.iter().enumerate() {
        let t = |k: usize| u + 1 + 3 * j + k;
        edges.extend([(t(0), t(1)), (t(0), t(2)), (t(1), t(2))]);
        for (k, l) in c.iter().enumerate() {
            edges.push((lit(l), t(k)));
        }
    }
    Graph::from_edges_dedup(u + 1 + 3 * i.clauses.len(), edges)
}

/// Diamond-free graph whose clique graph is the [`c7_nae_to_kg`] graph
/// (when every literal occurs and there are at least two variables).
///
/// Layout: the clique `C` on `0..n` (one vertex per variable), then per
/// clause `j` a star with centre `n+4j` and leaves `n+4j+1+k`. Each
/// literal's clique is its variable's `C` vertex plus the leaves carrying
/// it.
///
/// A literal repeated within one clause would put two leaves of the same
/// star into one literal clique, creating a diamond, so such clauses are
/// rejected. A variable may still appear with both signs.
pub fn c8_kg_to_graph(i: &NaeInstance) -> Result<Graph> {
    let n = i.var_count;
    let mut edges = Vec::new();
    for a in 0..n {
        edges.extend((a + 1..n).map(|b| (a, b)));
    }
    let mut members: Vec<Vec<VertexId>> = vec![Vec::new(); 2 * n];
    for (j, c) in i.clauses.iter().enumerate() {
        if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
            return Err(Error::precondition(format!("clause {j} repeats a literal")));
        }
        let center = n + 4 * j;
        for (k, l) in c.iter().enumerate() {
            let leaf = center + 1 + k;
            edges.push((center, leaf));
            members[2 * l.var + usize::from(l.negated)].push(leaf);
        }
    }
    for (slot, leaves) in members.iter().enumerate() {
        let var = slot / 2;
        for (a, &x) in leaves.iter().enumerate() {
            edges.push((var, x));
            edges.extend(leaves[a + 1..].iter().map(|&y| (x, y)));
        }
    }
    Graph::from_edges(n + 4 * i.clauses.len(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_diamond_free;

    fn inst(n: usize, clauses: &[[(usize, bool); 3]]) -> NaeInstance {
        NaeInstance::new(
            n,
            clauses
                .iter()
                .map(|c| c.map(|(var, negated)| Literal { var, negated }))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let xyz = [(0, false), (1, false), (2, false)];
        assert!(nae_brute_force(&inst(3, &[xyz])).unwrap());
        assert!(!nae_brute_force(&inst(1, &[[(0, false); 3]])).unwrap());
        let neg = [(0, true), (1, true), (2, true)];
        assert!(nae_brute_force(&inst(3, &[xyz, neg])).unwrap());
        assert!(nae_brute_force(&inst(0, &[])).unwrap());
        assert!(nae_brute_force(&inst(26, &[])).is_err());
    }

    #[test]
    fn c7_counts() {
        let g = c7_nae_to_kg(&inst(1, &[]));
        assert_eq!((g.n(), g.m()), (3, 3));
        let g = c7_nae_to_kg(&inst(3, &[[(0, false), (1, false), (2, false)]]));
        assert_eq!((g.n(), g.m()), (10, 15));
        let g = c7_nae_to_kg(&inst(0, &[]));
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn c8_counts() {
        let g = c8_kg_to_graph(&inst(3, &[[(0, false), (1, false), (2, false)]])).unwrap();
        assert_eq!(g.n(), 7);
        assert!(is_diamond_free(&g));
        let g = c8_kg_to_graph(&inst(2, &[])).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(c8_kg_to_graph(&inst(2, &[[(0, false), (0, false), (1, true)]])).is_err());
        assert!(c8_kg_to_graph(&inst(2, &[[(0, false), (0, true), (1, true)]])).is_ok());
    }
}
