use fixedbitset::FixedBitSet;

/// Lower bound on the sets still needed for the given uncovered elements.
pub(crate) type LowerBound<'a> = &'a dyn Fn(&FixedBitSet) -> usize;

/// Exact set cover by depth-first branch and bound.
///
/// Each node branches on the uncovered element with the fewest usable
/// sets. Branch `i` takes that element's `i`-th candidate and forbids the
/// earlier ones, so every cover is reached along one path only. A candidate
/// whose remaining contribution is contained in another usable candidate's
/// is skipped.
pub(crate) struct SetCover<'a> {
    sets: &'a [FixedBitSet],
    containing: Vec<Vec<usize>>,
    lower: Option<LowerBound<'a>>,
    pub nodes: u64,
    budget: u64,
}

impl<'a> SetCover<'a> {
    pub fn new(universe: usize, sets: &'a [FixedBitSet], budget: u64) -> Self {
        let mut containing = vec![Vec::new(); universe];
        for (i, s) in sets.iter().enumerate() {
            for e in s.ones() {
                containing[e].push(i);
            }
        }
        SetCover {
            sets,
            containing,
            lower: None,
            nodes: 0,
            budget,
        }
    }

    pub fn with_lower_bound(mut self, lower: LowerBound<'a>) -> Self {
        self.lower = Some(lower);
        self
    }

    /// A cover of `target` by at most `k` sets, `Some(None)` when none
    /// exists, `None` when the node budget runs out.
    pub fn decide(&mut self, target: &FixedBitSet, k: usize) -> Option<Option<Vec<usize>>> {
        let mut chosen = Vec::new();
        let mut banned = FixedBitSet::with_capacity(self.sets.len());
        match self.search(target.clone(), &mut chosen, &mut banned, k)? {
            true => Some(Some(chosen)),
            false => Some(None),
        }
    }

    fn search(
        &mut self,
        uncovered: FixedBitSet,
        chosen: &mut Vec<usize>,
        banned: &mut FixedBitSet,
        k: usize,
    ) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if uncovered.is_clear() {
            return Some(true);
        }
        let left = k - chosen.len();
        if left == 0 {
            return Some(false);
        }
        if let Some(lb) = self.lower {
            if lb(&uncovered) > left {
                return Some(false);
            }
        }

        let mut best: Option<(usize, usize)> = None;
        for e in uncovered.ones() {
            let usable = self.containing[e].iter().filter(|&&s| !banned.contains(s)).count();
            if best.is_none_or(|(_, c)| usable < c) {
                best = Some((e, usable));
                if usable <= 1 {
                    break;
                }
            }
        }
        let (e, usable) = best.unwrap();
        if usable == 0 {
            return Some(false);
        }

        let cands: Vec<usize> = self.containing[e]
            .iter()
            .copied()
            .filter(|&s| !banned.contains(s))
            .collect();
        let gains: Vec<FixedBitSet> = cands
            .iter()
            .map(|&s| {
                let mut g = self.sets[s].clone();
                g.intersect_with(&uncovered);
                g
            })
            .collect();

        let banned_here = banned.clone();
        let mut result = Some(false);
        for (i, &s) in cands.iter().enumerate() {
            let dominated = gains.iter().enumerate().any(|(j, gj)| {
                j != i && gains[i].is_subset(gj) && (gains[i] != *gj || j < i)
            });
            if !dominated {
                let mut rest = uncovered.clone();
                rest.difference_with(&self.sets[s]);
                chosen.push(s);
                match self.search(rest, chosen, banned, k) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => result = None,
                }
                chosen.pop();
                if result.is_none() {
                    break;
                }
            }
            banned.insert(s);
        }
        banned.clone_from(&banned_here);
        result
    }
}
