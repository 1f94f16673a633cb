//! The ground set `N × [ℓ]` and the matroid lifted onto it.
//!
//! A pair `(u, i)` assigns base element `u` to level `i ∈ [1, ℓ]`. Pairs are
//! flattened to `u·ℓ + (i − 1)`, so a lifted set is an ordinary
//! [`ElementSet`] over `n·ℓ` elements.

use serde::{Deserialize, Serialize};

use super::Matroid;
use crate::error::{Error, Result};
use crate::set::{ElementId, ElementSet};

/// Upper bound on the number of levels; guide evaluation costs `2^ℓ` queries.
pub const MAX_LEVELS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LiftedElement {
    pub base: ElementId,
    /// 1-based level.
    pub level: usize,
}

impl LiftedElement {
    pub fn new(base: usize, level: usize) -> Self {
        Self {
            base: ElementId(base),
            level,
        }
    }
}

/// Shape of a lifted ground set: `n` base elements times `levels` copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftedLayout {
    n: usize,
    levels: usize,
}

impl LiftedLayout {
    pub fn new(n: usize, levels: usize) -> Result<Self> {
        if levels == 0 || levels > MAX_LEVELS {
            return Err(Error::InvalidLevels {
                found: levels,
                max: MAX_LEVELS,
            });
        }
        Ok(Self { n, levels })
    }

    pub fn base_size(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn lifted_size(&self) -> usize {
        self.n * self.levels
    }

    #[inline]
    pub fn flatten(&self, x: LiftedElement) -> ElementId {
        debug_assert!(x.level >= 1 && x.level <= self.levels);
        ElementId(x.base.index() * self.levels + x.level - 1)
    }

    #[inline]
    pub fn unflatten(&self, id: ElementId) -> LiftedElement {
        LiftedElement {
            base: ElementId(id.index() / self.levels),
            level: id.index() % self.levels + 1,
        }
    }

    #[inline]
    pub fn base_of(&self, id: ElementId) -> ElementId {
        ElementId(id.index() / self.levels)
    }

    /// Bit `i − 1` of the mask marks level `i`.
    #[inline]
    pub fn level_bit(&self, id: ElementId) -> u32 {
        1 << (id.index() % self.levels)
    }

    pub fn all_levels_mask(&self) -> u32 {
        ((1u64 << self.levels) - 1) as u32
    }

    pub fn empty(&self) -> ElementSet {
        ElementSet::empty(self.lifted_size())
    }

    pub fn set_of(&self, pairs: &[(usize, usize)]) -> ElementSet {
        let mut s = self.empty();
        for &(u, i) in pairs {
            s.insert(self.flatten(LiftedElement::new(u, i)));
        }
        s
    }

    /// `T × {level}`.
    pub fn embed(&self, set: &ElementSet, level: usize) -> ElementSet {
        let mut out = self.empty();
        for u in set.iter() {
            out.insert(self.flatten(LiftedElement { base: u, level }));
        }
        out
    }

    /// For each base element, the mask of levels at which it appears in `set`.
    pub fn level_masks(&self, set: &ElementSet) -> Vec<u32> {
        let mut masks = vec![0u32; self.n];
        for x in set.iter() {
            masks[self.base_of(x).index()] |= self.level_bit(x);
        }
        masks
    }

    /// `π_J(S)`: base elements present at some level in `levels_mask`.
    pub fn project(&self, set: &ElementSet, levels_mask: u32) -> ElementSet {
        let mut out = ElementSet::empty(self.n);
        for x in set.iter() {
            if self.level_bit(x) & levels_mask != 0 {
                out.insert(self.base_of(x));
            }
        }
        out
    }

    /// `π_[ℓ](S)`.
    pub fn project_all(&self, set: &ElementSet) -> ElementSet {
        self.project(set, self.all_levels_mask())
    }

    /// True iff no base element appears at two levels.
    pub fn is_simple(&self, set: &ElementSet) -> bool {
        let mut seen = ElementSet::empty(self.n);
        set.iter().all(|x| seen.insert(self.base_of(x)))
    }
}

/// Converts a list of 1-based levels into a level mask.
pub fn levels_mask(levels: &[usize]) -> u32 {
    levels.iter().fold(0, |acc, &i| acc | 1 << (i - 1))
}

/// The matroid on `N × [ℓ]` whose independent sets use each base element at
/// most once and project onto an independent set of the base matroid.
///
/// A query issues at most one base query: sets that repeat a base element are
/// rejected before the base oracle is consulted.
#[derive(Debug, Clone)]
pub struct LiftedMatroid<M> {
    base: M,
    layout: LiftedLayout,
}

impl<M: Matroid> LiftedMatroid<M> {
    pub fn new(base: M, levels: usize) -> Result<Self> {
        let layout = LiftedLayout::new(base.ground_size(), levels)?;
        Ok(Self { base, layout })
    }

    pub fn layout(&self) -> LiftedLayout {
        self.layout
    }

    pub fn base(&self) -> &M {
        &self.base
    }
}

impl<M: Matroid> Matroid for LiftedMatroid<M> {
    fn ground_size(&self) -> usize {
        self.layout.lifted_size()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        let mut projected = ElementSet::empty(self.layout.n);
        for x in set.iter() {
            if !projected.insert(self.layout.base_of(x)) {
                return false;
            }
        }
        self.base.is_independent(&projected)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ledger::{with_counting, QueryLedger};
    use crate::matroid::UniformMatroid;

    #[test]
    fn flatten_round_trip() {
        let l = LiftedLayout::new(5, 3).unwrap();
        for id in 0..15 {
            let x = l.unflatten(ElementId(id));
            assert_eq!(l.flatten(x), ElementId(id));
            assert!(x.level >= 1 && x.level <= 3);
        }
        assert_eq!(l.flatten(LiftedElement::new(2, 3)), ElementId(8));
    }

    #[test]
    fn level_bounds() {
        assert!(LiftedLayout::new(3, 0).is_err());
        assert!(LiftedLayout::new(3, MAX_LEVELS + 1).is_err());
        assert!(LiftedLayout::new(3, MAX_LEVELS).is_ok());
    }

    #[test]
    fn projections() {
        let l = LiftedLayout::new(6, 2).unwrap();
        let s = l.set_of(&[(3, 1), (5, 2)]);
        assert_eq!(l.project(&s, levels_mask(&[1])), ElementSet::of(6, &[3]));
        assert_eq!(l.project(&s, 0), ElementSet::empty(6));
        let dup = l.set_of(&[(3, 1), (3, 2)]);
        assert_eq!(l.project(&dup, levels_mask(&[1, 2])), ElementSet::of(6, &[3]));
    }

    #[test]
    fn parallel_copies_are_dependent() {
        let m = LiftedMatroid::new(UniformMatroid::new(4, 4), 2).unwrap();
        let l = m.layout();
        assert!(!m.is_independent(&l.set_of(&[(1, 1), (1, 2)])));
        assert!(m.is_independent(&l.set_of(&[(1, 1), (2, 2)])));
    }

    #[test]
    fn embedding_preserves_independence() {
        let base = UniformMatroid::new(5, 2);
        let m = LiftedMatroid::new(base.clone(), 3).unwrap();
        let t = ElementSet::of(5, &[0, 4]);
        assert!(base.is_independent(&t));
        assert!(m.is_independent(&m.layout().embed(&t, 1)));
    }

    #[test]
    fn one_base_query_per_lifted_query() {
        let base = UniformMatroid::new(4, 2);
        let ledger = QueryLedger::new();
        let m = LiftedMatroid::new(with_counting(&base, &ledger), 3).unwrap();
        let l = m.layout();
        m.is_independent(&l.set_of(&[(0, 1), (2, 3)]));
        m.is_independent(&l.set_of(&[(0, 1), (1, 2), (3, 3)]));
        assert_eq!(ledger.independence_queries(), 2);
        m.is_independent(&l.set_of(&[(0, 1), (0, 3)]));
        assert_eq!(ledger.independence_queries(), 2);
    }
}
