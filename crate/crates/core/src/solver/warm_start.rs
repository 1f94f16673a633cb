use crate::matroid::Matroid;
use crate::objective::ValueOracle;
use crate::scalar::{NumericPolicy, Scalar};
use crate::set::{ElementId, ElementSet};

use super::WarmStart;

/// Multiplicative step `δ` of the descending-threshold greedy.
pub const THRESHOLD_DECAY: f64 = 0.125;

/// An independent set with value at least a third of the optimum.
pub fn warm_start<T, F, M>(f: &F, m: &M, kind: WarmStart) -> ElementSet
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    match kind {
        WarmStart::ThresholdGreedy => threshold_greedy(f, m),
        WarmStart::PlainGreedy => plain_greedy(f, m),
    }
}

/// Descending-threshold greedy.
///
/// Starts at `τ = d`, the best value of a feasible singleton, sweeps the
/// ground set in ascending order adding every element that keeps the set
/// independent and gains at least `τ`, then lowers `τ` by a factor `1 − δ`;
/// stops once `τ < δ·d/n`.
pub fn threshold_greedy<T, F, M>(f: &F, m: &M) -> ElementSet
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    let n = m.ground_size();
    let policy = NumericPolicy::for_scalar::<T>();
    let empty = ElementSet::empty(n);
    let mut top: Option<T> = None;
    for u in (0..n).map(ElementId) {
        let single = empty.with(u);
        if m.is_independent(&single) {
            let value = f.eval(&single);
            top = Some(match top {
                Some(best) => T::max_of(best, value),
                None => value,
            });
        }
    }
    let d = match top {
        Some(d) if d > T::zero() => d,
        _ => return empty,
    };
    let delta = T::from_real(THRESHOLD_DECAY);
    let shrink = T::one() - delta.clone();
    let floor = delta * d.clone() / T::from_count(n);
    let mut cursor = f.cursor(empty);
    let mut tau = d;
    while tau >= floor {
        for u in (0..n).map(ElementId) {
            if cursor.set().contains(u) || !policy.ge(&cursor.gain(u), &tau) {
                continue;
            }
            if m.is_independent(&cursor.set().with(u)) {
                cursor.insert(u);
            }
        }
        tau = tau * shrink.clone();
    }
    cursor.set().clone()
}

/// Adds the best feasible element (ties to the smaller id) until no element
/// can be added.
pub fn plain_greedy<T, F, M>(f: &F, m: &M) -> ElementSet
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    let n = m.ground_size();
    let mut cursor = f.cursor(ElementSet::empty(n));
    let mut blocked = ElementSet::empty(n);
    loop {
        let mut best: Option<(ElementId, T)> = None;
        for u in (0..n).map(ElementId) {
            if cursor.set().contains(u) || blocked.contains(u) {
                continue;
            }
            if !m.is_independent(&cursor.set().with(u)) {
                // Adding elements never makes u feasible again.
                blocked.insert(u);
                continue;
            }
            let gain = cursor.gain(u);
            if best.as_ref().is_none_or(|(_, b)| gain > *b) {
                best = Some((u, gain));
            }
        }
        match best {
            Some((u, _)) => cursor.insert(u),
            None => return cursor.set().clone(),
        }
    }
}
