//! The auxiliary guide `g` and its single-argument form `g'` on `N × [ℓ]`.
//!
//! `g(S_1, …, S_ℓ) = Σ_{J ⊆ [ℓ]} α_{|J|} · f(S_J)` where `S_J` is the union of
//! the parts indexed by `J`. On the lifted ground set, `g'(S)` evaluates `g` on
//! the projections `π_1(S), …, π_ℓ(S)`. Level subsets `J` are bit masks with
//! bit `i − 1` standing for level `i`; `α_0 = 0`, so `J = ∅` is never queried.

use super::{marginal, AlphaSchedule, Cursor, ValueOracle};
use crate::error::{Error, Result};
use crate::matroid::{LiftedElement, LiftedLayout};
use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};

/// `g(S_1, …, S_ℓ)` for pairwise disjoint parts; `2^ℓ − 1` value queries.
pub fn g_eval<T, F>(f: &F, alpha: &AlphaSchedule<T>, parts: &[ElementSet]) -> Result<T>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
{
    let levels = alpha.levels();
    if parts.len() != levels {
        return Err(Error::InvalidLevels {
            found: parts.len(),
            max: levels,
        });
    }
    let n = f.ground_size();
    let mut seen = ElementSet::empty(n);
    for part in parts {
        if part.universe_size() != n {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: part.universe_size(),
            });
        }
        if let Some(u) = part.intersection(&seen).iter().next() {
            return Err(Error::OverlappingParts(u));
        }
        seen.union_with(part);
    }
    let mut total = T::zero();
    for mask in 1u32..(1 << levels) {
        let mut union = ElementSet::empty(n);
        for (i, part) in parts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union.union_with(part);
            }
        }
        total = total + alpha.get(mask.count_ones() as usize).clone() * f.eval(&union);
    }
    Ok(total)
}

/// `g'(S) = Σ_{J ⊆ [ℓ]} α_{|J|} · f(π_J(S))` as a value oracle over `N × [ℓ]`.
///
/// Non-negative, monotone and submodular whenever `f` is. Each evaluation
/// costs `2^ℓ − 1` queries to `f`; its cursor keeps every `π_J(S)` and
/// `f(π_J(S))` cached so that a marginal costs at most `2^{ℓ−1}` queries.
#[derive(Debug, Clone)]
pub struct GPrime<F, T> {
    f: F,
    alpha: AlphaSchedule<T>,
    layout: LiftedLayout,
    weight_of_mask: Vec<T>,
}

impl<F, T> GPrime<F, T>
where
    T: Scalar,
    F: ValueOracle<T>,
{
    pub fn new(f: F, alpha: AlphaSchedule<T>) -> Result<Self> {
        let layout = LiftedLayout::new(f.ground_size(), alpha.levels())?;
        let weight_of_mask = (0u32..1 << alpha.levels())
            .map(|mask| alpha.get(mask.count_ones() as usize).clone())
            .collect();
        Ok(Self {
            f,
            alpha,
            layout,
            weight_of_mask,
        })
    }

    pub fn layout(&self) -> LiftedLayout {
        self.layout
    }

    pub fn alpha(&self) -> &AlphaSchedule<T> {
        &self.alpha
    }

    pub fn objective(&self) -> &F {
        &self.f
    }

    fn masks(&self) -> std::ops::Range<u32> {
        1..1 << self.layout.levels()
    }

    fn projection_from_masks(&self, level_masks: &[u32], mask: u32) -> ElementSet {
        let mut out = ElementSet::empty(self.layout.base_size());
        for (u, &m) in level_masks.iter().enumerate() {
            if m & mask != 0 {
                out.insert(ElementId(u));
            }
        }
        out
    }

    /// `g'(x | S) = Σ_{J ∋ level(x)} α_{|J|} · f(base(x) | π_J(S))`, computed
    /// from fresh projections with direct `f`-marginals.
    pub fn marginal(&self, x: LiftedElement, set: &ElementSet) -> T {
        let bit = 1u32 << (x.level - 1);
        let level_masks = self.layout.level_masks(set);
        self.masks()
            .filter(|mask| mask & bit != 0)
            .fold(T::zero(), |acc, mask| {
                let projected = self.projection_from_masks(&level_masks, mask);
                acc + self.weight_of_mask[mask as usize].clone() * marginal(&self.f, x.base, &projected)
            })
    }
}

impl<F, T> ValueOracle<T> for GPrime<F, T>
where
    T: Scalar,
    F: ValueOracle<T>,
{
    fn ground_size(&self) -> usize {
        self.layout.lifted_size()
    }

    fn eval(&self, set: &ElementSet) -> T {
        let level_masks = self.layout.level_masks(set);
        self.masks().fold(T::zero(), |acc, mask| {
            let projected = self.projection_from_masks(&level_masks, mask);
            acc + self.weight_of_mask[mask as usize].clone() * self.f.eval(&projected)
        })
    }

    fn cursor(&self, set: ElementSet) -> Box<dyn Cursor<T> + '_> {
        Box::new(LiftedCursor::new(self, set))
    }
}

/// Incremental state for `g'`: the lifted set, each base element's level mask,
/// and `π_J(S)`, `f(π_J(S))` for every non-empty `J`.
pub struct LiftedCursor<'a, F, T> {
    g: &'a GPrime<F, T>,
    set: ElementSet,
    level_masks: Vec<u32>,
    projections: Vec<ElementSet>,
    values: Vec<T>,
    value: T,
}

impl<'a, F, T> LiftedCursor<'a, F, T>
where
    T: Scalar,
    F: ValueOracle<T>,
{
    pub fn new(g: &'a GPrime<F, T>, set: ElementSet) -> Self {
        let level_masks = g.layout.level_masks(&set);
        let count = 1usize << g.layout.levels();
        let mut projections = Vec::with_capacity(count);
        let mut values = Vec::with_capacity(count);
        projections.push(ElementSet::empty(g.layout.base_size()));
        values.push(T::zero());
        for mask in g.masks() {
            let p = g.projection_from_masks(&level_masks, mask);
            values.push(g.f.eval(&p));
            projections.push(p);
        }
        let mut cursor = Self {
            g,
            set,
            level_masks,
            projections,
            values,
            value: T::zero(),
        };
        cursor.refresh_value();
        cursor
    }

    fn refresh_value(&mut self) {
        self.value = self.g.masks().fold(T::zero(), |acc, mask| {
            acc + self.g.weight_of_mask[mask as usize].clone() * self.values[mask as usize].clone()
        });
    }

    /// Level subsets whose projection gains `u` when level `bit` is added.
    fn gaining_masks(&self, u: ElementId, bit: u32) -> impl Iterator<Item = u32> + '_ {
        let present = self.level_masks[u.index()];
        self.g
            .masks()
            .filter(move |mask| mask & bit != 0 && mask & present == 0)
    }

    /// Level subsets whose projection loses `u` when level `bit` is removed.
    fn losing_masks(&self, u: ElementId, bit: u32) -> impl Iterator<Item = u32> + '_ {
        let present = self.level_masks[u.index()];
        self.g.masks().filter(move |mask| mask & present == bit)
    }
}

impl<F, T> Cursor<T> for LiftedCursor<'_, F, T>
where
    T: Scalar,
    F: ValueOracle<T>,
{
    fn set(&self) -> &ElementSet {
        &self.set
    }

    fn value(&self) -> T {
        self.value.clone()
    }

    fn gain(&self, x: ElementId) -> T {
        if self.set.contains(x) {
            return T::zero();
        }
        let u = self.g.layout.base_of(x);
        let bit = self.g.layout.level_bit(x);
        self.gaining_masks(u, bit).fold(T::zero(), |acc, mask| {
            let m = mask as usize;
            let with_u = self.projections[m].with(u);
            acc + self.g.weight_of_mask[m].clone() * (self.g.f.eval(&with_u) - self.values[m].clone())
        })
    }

    fn loss(&self, x: ElementId) -> T {
        if !self.set.contains(x) {
            return self.gain(x);
        }
        let u = self.g.layout.base_of(x);
        let bit = self.g.layout.level_bit(x);
        self.losing_masks(u, bit).fold(T::zero(), |acc, mask| {
            let m = mask as usize;
            let without_u = self.projections[m].without(u);
            acc + self.g.weight_of_mask[m].clone() * (self.values[m].clone() - self.g.f.eval(&without_u))
        })
    }

    fn insert(&mut self, x: ElementId) {
        if !self.set.insert(x) {
            return;
        }
        let u = self.g.layout.base_of(x);
        let bit = self.g.layout.level_bit(x);
        let touched: Vec<u32> = self.gaining_masks(u, bit).collect();
        for mask in touched {
            let m = mask as usize;
            self.projections[m].insert(u);
            self.values[m] = self.g.f.eval(&self.projections[m]);
        }
        self.level_masks[u.index()] |= bit;
        self.refresh_value();
    }

    fn remove(&mut self, x: ElementId) {
        if !self.set.remove(x) {
            return;
        }
        let u = self.g.layout.base_of(x);
        let bit = self.g.layout.level_bit(x);
        let touched: Vec<u32> = self.losing_masks(u, bit).collect();
        for mask in touched {
            let m = mask as usize;
            self.projections[m].remove(u);
            self.values[m] = self.g.f.eval(&self.projections[m]);
        }
        self.level_masks[u.index()] &= !bit;
        self.refresh_value();
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{cardinality, coverage4};
    use super::*;
    use crate::ledger::{with_counting, QueryLedger};
    use crate::rng::RandomSource;

    #[test]
    fn g_of_two_singletons() {
        let f = cardinality(2);
        let alpha = AlphaSchedule::new(2).unwrap();
        let parts = [ElementSet::of(2, &[0]), ElementSet::of(2, &[1])];
        assert_eq!(g_eval(&f, &alpha, &parts).unwrap(), 5.0);
    }

    #[test]
    fn g_single_level_is_f() {
        let f = coverage4();
        let alpha = AlphaSchedule::new(1).unwrap();
        let parts = [ElementSet::of(4, &[1, 3])];
        assert_eq!(g_eval::<f64, _>(&f, &alpha, &parts).unwrap(), 5.0);
    }

    #[test]
    fn g_rejects_overlap() {
        let f = cardinality(3);
        let alpha = AlphaSchedule::new(2).unwrap();
        let parts = [ElementSet::of(3, &[0, 1]), ElementSet::of(3, &[1])];
        assert_eq!(g_eval(&f, &alpha, &parts), Err(Error::OverlappingParts(ElementId(1))));
    }

    #[test]
    fn g_prime_on_single_level() {
        // S = T × {1}: every J containing level 1 sees T, the rest see ∅.
        let f = coverage4();
        let alpha = AlphaSchedule::<f64>::new(3).unwrap();
        let g = GPrime::new(&f, alpha.clone()).unwrap();
        let t = ElementSet::of(4, &[0, 3]);
        let s = g.layout().embed(&t, 1);
        let ft: f64 = f.eval(&t);
        let expected = (1..3 + 1).map(|k| {
            // number of J of size k containing level 1 is C(2, k−1)
            let c = [1.0, 2.0, 1.0][k - 1];
            c * alpha.get(k) * ft
        });
        assert!((g.eval(&s) - expected.sum::<f64>()).abs() < 1e-12);
        assert_eq!(g.eval(&g.layout().empty()), 0.0);
    }

    #[test]
    fn g_prime_counts_queries() {
        let f = coverage4();
        let ledger = QueryLedger::new();
        let counted = with_counting(&f, &ledger);
        let g = GPrime::new(counted, AlphaSchedule::<f64>::new(3).unwrap()).unwrap();
        let _ = g.eval(&g.layout().set_of(&[(0, 1)]));
        assert_eq!(ledger.value_queries(), 7);
    }

    #[test]
    fn cursor_agrees_with_evaluation_differences() {
        let f = coverage4();
        let g = GPrime::new(&f, AlphaSchedule::<f64>::new(3).unwrap()).unwrap();
        let l = g.layout();
        let mut rng = RandomSource::new(5);
        for _ in 0..100 {
            let k = rng.below(5);
            let s = rng
                .sample_without_replacement(&ElementSet::full(l.lifted_size()), k)
                .unwrap();
            let c = LiftedCursor::new(&g, s.clone());
            assert!((c.value() - g.eval(&s)).abs() < 1e-9);
            for x in (0..l.lifted_size()).map(ElementId) {
                let direct_gain = g.eval(&s.with(x)) - g.eval(&s);
                let direct_loss = g.eval(&s.with(x)) - g.eval(&s.without(x));
                assert!((c.gain(x) - direct_gain).abs() < 1e-9);
                assert!((c.loss(x) - direct_loss).abs() < 1e-9);
                assert!((g.marginal(l.unflatten(x), &s) - direct_gain).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn cursor_moves_track_evaluation() {
        let f = coverage4();
        let g = GPrime::new(&f, AlphaSchedule::<f64>::new(2).unwrap()).unwrap();
        let l = g.layout();
        let mut c = LiftedCursor::new(&g, l.set_of(&[(0, 1)]));
        c.insert(l.flatten(LiftedElement::new(3, 2)));
        assert!((c.value() - g.eval(c.set())).abs() < 1e-12);
        c.swap(l.flatten(LiftedElement::new(0, 1)), l.flatten(LiftedElement::new(1, 1)));
        assert_eq!(*c.set(), l.set_of(&[(1, 1), (3, 2)]));
        assert!((c.value() - g.eval(c.set())).abs() < 1e-12);
        c.remove(l.flatten(LiftedElement::new(3, 2)));
        assert!((c.value() - g.eval(c.set())).abs() < 1e-12);
    }
}
