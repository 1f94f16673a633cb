use crate::error::{Error, Result};
use crate::matroid::{check_universe, extend_unchecked, min_weight_exchange, Matroid};
use crate::objective::ValueOracle;
use crate::scalar::{NumericPolicy, Scalar};
use crate::set::{ElementId, ElementSet};

use super::{check_epsilon, warm_start, SearchOutcome, WarmStart};

/// Deterministic swap-based local search.
///
/// Starts from `hint` (or a warm start), completes it to a base and then
/// repeatedly applies the first swap, in ascending order of the entering
/// element `v`, with `f(v | S) − f(u | S − u) ≥ (ε/r)·f(S₀)`. For each `v`
/// the leaving element is the cheapest feasible one, found by
/// [`min_weight_exchange`]. Elements `v` whose singleton is dependent are
/// discarded once, up front.
pub fn det_local_search<T, F, M>(
    f: &F,
    m: &M,
    epsilon: f64,
    warm: WarmStart,
    hint: Option<&ElementSet>,
) -> Result<SearchOutcome<T>>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    check_epsilon(epsilon)?;
    let policy = NumericPolicy::for_scalar::<T>();
    let n = m.ground_size();
    let start = match hint {
        Some(s) => {
            check_universe(m, s)?;
            if !m.is_independent(s) {
                return Err(Error::Dependent);
            }
            s.clone()
        }
        None => warm_start(f, m, warm),
    };
    let mut cursor = f.cursor(start.clone());
    let start_value = cursor.value();
    let base = extend_unchecked(m, start.clone());
    for u in base.difference(&start).iter() {
        cursor.insert(u);
    }
    let r = base.len();
    let mut outcome = SearchOutcome {
        set: None,
        iterations: 0,
        warm_start: start,
        warm_start_value: start_value.clone(),
        attempts: 1,
    };
    if r == 0 {
        outcome.set = Some(base);
        return Ok(outcome);
    }
    let threshold = T::max_of(T::from_real(epsilon) / T::from_count(r) * start_value, T::zero());

    let mut loops = ElementSet::empty(n);
    for v in (0..n).map(ElementId) {
        if !base.contains(v) && !m.is_independent(&ElementSet::empty(n).with(v)) {
            loops.insert(v);
        }
    }

    loop {
        outcome.iterations += 1;
        let s = cursor.set().clone();
        let losses: Vec<(ElementId, T)> = s.iter().map(|u| (u, cursor.loss(u))).collect();
        let cheapest = losses
            .iter()
            .map(|(_, w)| w.clone())
            .reduce(T::min_of)
            .expect("a base of positive rank is non-empty");
        let mut chosen = None;
        for v in (0..n).map(ElementId) {
            if s.contains(v) || loops.contains(v) {
                continue;
            }
            let gain = cursor.gain(v);
            if !policy.meets_threshold(&(gain.clone() - cheapest.clone()), &threshold) {
                continue;
            }
            let u = min_weight_exchange(m, &s, &losses, v)?;
            let loss = losses
                .iter()
                .find(|(x, _)| *x == u)
                .map(|(_, w)| w.clone())
                .expect("exchange returns a candidate");
            if policy.meets_threshold(&(gain - loss), &threshold) {
                chosen = Some((u, v));
                break;
            }
        }
        match chosen {
            Some((u, v)) => {
                let before = cursor.value();
                cursor.swap(u, v);
                debug_assert!(
                    policy.ge(&(cursor.value() - before), &threshold),
                    "accepted swap must gain at least the threshold"
                );
            }
            None => break,
        }
    }
    outcome.set = Some(cursor.set().clone());
    Ok(outcome)
}
