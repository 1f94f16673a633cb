use crate::error::Result;
use crate::matroid::{extend_unchecked, max_weight_independent, min_weight_exchange, Matroid};
use crate::objective::{Cursor, ValueOracle};
use crate::rng::RandomSource;
use crate::scalar::{NumericPolicy, Scalar};
use crate::set::{ElementId, ElementSet};
use crate::verify::{ceil_sqrt, removal_weights};

use super::{check_epsilon, warm_start, SearchOutcome, WarmStart};

/// `(|R₁|, |R₂|) = (min{r, ⌈√n⌉}, max{⌈n/r⌉, ⌈√n⌉})`, with `|R₂|` capped at `n`.
pub fn sample_sizes(n: usize, r: usize) -> (usize, usize) {
    let root = ceil_sqrt(n);
    let r1 = r.min(root);
    let r2 = if r == 0 { n } else { n.div_ceil(r).max(root).min(n) };
    (r1, r2)
}

/// `⌈log₃(1/ε)⌉`, at least one.
pub fn repetitions_for(epsilon: f64) -> usize {
    let mut reps = 1;
    let mut reach = 3.0;
    while reach * epsilon < 1.0 {
        reps += 1;
        reach *= 3.0;
    }
    reps
}

/// One run of the sampled local search; `set` is `None` on failure.
pub fn rand_local_search_once<T, F, M>(
    f: &F,
    m: &M,
    epsilon: f64,
    warm: WarmStart,
    rng: &mut RandomSource,
) -> Result<SearchOutcome<T>>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    rand_local_search_with(f, m, epsilon, warm, Some(1), rng)
}

/// The sampled local search repeated up to `⌈log₃(1/ε)⌉` times (or
/// `repetitions` when given), returning the first run that does not fail.
///
/// The warm start is deterministic, so it is computed once and shared by all
/// attempts.
pub fn rand_local_search<T, F, M>(
    f: &F,
    m: &M,
    epsilon: f64,
    warm: WarmStart,
    repetitions: Option<usize>,
    rng: &mut RandomSource,
) -> Result<SearchOutcome<T>>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    rand_local_search_with(f, m, epsilon, warm, repetitions, rng)
}

fn rand_local_search_with<T, F, M>(
    f: &F,
    m: &M,
    epsilon: f64,
    warm: WarmStart,
    repetitions: Option<usize>,
    rng: &mut RandomSource,
) -> Result<SearchOutcome<T>>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    check_epsilon(epsilon)?;
    let start = warm_start(f, m, warm);
    let start_value = f.eval(&start);
    let base = extend_unchecked(m, start.clone());
    let mut outcome = SearchOutcome {
        set: None,
        iterations: 0,
        warm_start: start,
        warm_start_value: start_value.clone(),
        attempts: 0,
    };
    let attempts = repetitions.unwrap_or_else(|| repetitions_for(epsilon));
    for _ in 0..attempts {
        outcome.attempts += 1;
        let (found, rounds) = sampled_run(f, m, epsilon, &base, &start_value, rng)?;
        outcome.iterations += rounds;
        if found.is_some() {
            outcome.set = found;
            break;
        }
    }
    Ok(outcome)
}

fn sampled_run<T, F, M>(
    f: &F,
    m: &M,
    epsilon: f64,
    base: &ElementSet,
    start_value: &T,
    rng: &mut RandomSource,
) -> Result<(Option<ElementSet>, usize)>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    let policy = NumericPolicy::for_scalar::<T>();
    let n = m.ground_size();
    let r = base.len();
    if r == 0 {
        return Ok((Some(base.clone()), 0));
    }
    let rounds = (18.0 * r as f64 / epsilon).ceil() as usize;
    let (r1_size, r2_size) = sample_sizes(n, r);
    let ground = ElementSet::full(n);

    let mut cursor = f.cursor(base.clone());
    let mut history = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        let s = cursor.set().clone();
        history.push(s.clone());
        let r1 = rng.sample_without_replacement(&s, r1_size)?;
        let r2 = rng.sample_without_replacement(&ground, r2_size)?;
        if let Some((u, v)) = best_sampled_swap(&*cursor, m, &s, &r1, &r2, &policy)? {
            let before = cursor.value();
            cursor.swap(u, v);
            debug_assert!(policy.ge(&cursor.value(), &before), "swaps never lose value");
        }
    }

    let i = 1 + rng.below(rounds);
    let candidate = &history[i - 1];
    let (weights, in_set) = removal_weights(f, candidate);
    let witness = max_weight_independent(m, &weights);
    let total = witness
        .iter()
        .fold(T::zero(), |acc, v| acc + weights[v.index()].clone());
    let bound = T::from_real(epsilon) * start_value.clone();
    if policy.meets_threshold(&(total - in_set), &bound) {
        Ok((None, rounds))
    } else {
        Ok((Some(candidate.clone()), rounds))
    }
}

/// The best swap `(u, v)` with `u ∈ R₁`, `v ∈ R₂ \ S`, if its improvement
/// `f(v | S) − f(u | S − u)` is non-negative. Ties go to the smaller `v`.
fn best_sampled_swap<T, M>(
    cursor: &dyn Cursor<T>,
    m: &M,
    s: &ElementSet,
    r1: &ElementSet,
    r2: &ElementSet,
    policy: &NumericPolicy,
) -> Result<Option<(ElementId, ElementId)>>
where
    T: Scalar,
    M: Matroid + ?Sized,
{
    let rest = s.difference(r1);
    let entering: Vec<ElementId> = r2
        .difference(s)
        .iter()
        .filter(|&v| m.is_independent(&rest.with(v)))
        .collect();
    if entering.is_empty() {
        return Ok(None);
    }
    let losses: Vec<(ElementId, T)> = r1.iter().map(|u| (u, cursor.loss(u))).collect();
    let mut best: Option<(ElementId, ElementId, T)> = None;
    for v in entering {
        let u = min_weight_exchange(m, s, &losses, v)?;
        let loss = losses
            .iter()
            .find(|(x, _)| *x == u)
            .map(|(_, w)| w.clone())
            .expect("exchange returns a candidate");
        let diff = cursor.gain(v) - loss;
        if best.as_ref().is_none_or(|(_, _, d)| diff > *d) {
            best = Some((u, v, diff));
        }
    }
    Ok(best.and_then(|(u, v, diff)| policy.ge(&diff, &T::zero()).then_some((u, v))))
}
