use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::tessellation::{tessellation_edge_ids, Tessellation};

/// Default limit on the number of catalogued tessellations.
pub const DEFAULT_CATALOG_CAP: usize = 200_000;

/// Every edge-maximal tessellation of a graph with its edge set.
#[derive(Clone, Debug)]
pub struct TessellationCatalog {
    pub tessellations: Vec<Tessellation>,
    /// `edge_sets[i]` holds the edge ids of `tessellations[i]`.
    pub edge_sets: Vec<FixedBitSet>,
}

impl TessellationCatalog {
    pub fn len(&self) -> usize {
        self.tessellations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tessellations.is_empty()
    }

    /// Sorts by descending edge count, then lexicographically, and attaches
    /// edge sets over `host`'s edge ids.
    pub(crate) fn from_tessellations(host: &Graph, mut ts: Vec<Tessellation>) -> Self {
        let mut keyed: Vec<(usize, Tessellation, FixedBitSet)> = ts
            .drain(..)
            .map(|t| {
                let mut bits = FixedBitSet::with_capacity(host.m());
                for e in tessellation_edge_ids(host, &t) {
                    bits.insert(e);
                }
                (bits.count_ones(..), t, bits)
            })
            .collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        keyed.dedup_by(|a, b| a.2 == b.2);
        let (tessellations, edge_sets) = keyed.into_iter().map(|(_, t, b)| (t, b)).unzip();
        TessellationCatalog { tessellations, edge_sets }
    }
}

/// A tessellation is edge-maximal exactly when no two of its parts
/// (singletons included) can be merged into one clique, so the search
/// enumerates clique partitions with that property directly: the lowest
/// unplaced vertex picks its clique among the unplaced vertices, and a
/// clique is rejected if it could merge with one placed earlier.
pub fn enumerate_tessellations(g: &Graph, cap: usize) -> Result<TessellationCatalog> {
    if g.n() > 64 {
        return Err(Error::Capacity { what: "catalog vertex count", limit: 64 });
    }
    let nbr: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut e = Enumerator {
        nbr: &nbr,
        placed: Vec::new(),
        found: Vec::new(),
        cap,
    };
    e.partition(all)?;
    let ts = e
        .found
        .iter()
        .map(|parts| Tessellation::new(parts.iter().map(|&m| bits(m))))
        .collect();
    Ok(TessellationCatalog::from_tessellations(g, ts))
}

fn bits(mut m: u64) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

struct Enumerator<'a> {
    nbr: &'a [u64],
    /// Placed parts as (members, common neighbourhood of the members).
    placed: Vec<(u64, u64)>,
    found: Vec<Vec<u64>>,
    cap: usize,
}

impl Enumerator<'_> {
    fn partition(&mut self, free: u64) -> Result<()> {
        if free == 0 {
            if self.found.len() == self.cap {
                return Err(Error::Capacity { what: "tessellation catalog", limit: self.cap });
            }
            self.found.push(self.placed.iter().map(|p| p.0).collect());
            return Ok(());
        }
        let v = free.trailing_zeros() as usize;
        let cands = self.nbr[v] & free;
        self.grow(free, 1 << v, self.nbr[v], cands)
    }

    /// Visits every clique `part ∪ S` with `S ⊆ cands`, each exactly once.
    fn grow(&mut self, free: u64, part: u64, common: u64, mut cands: u64) -> Result<()> {
        let mergeable = self.placed.iter().any(|&(_, c)| part & !c == 0);
        if !mergeable {
            self.placed.push((part, common));
            let r = self.partition(free & !part);
            self.placed.pop();
            r?;
        }
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let next_common = common & self.nbr[w];
            self.grow(free, part | 1 << w, next_common, cands & next_common)?;
        }
        Ok(())
    }
}
