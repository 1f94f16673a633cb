//! Ground truth and certificates: exhaustive optimum, the local-optimality
//! gap, matroid-axiom and submodularity checks, approximation reporting.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{check_family, check_universe, max_weight_independent, AxiomViolation, Matroid};
use crate::objective::ValueOracle;
use crate::rng::RandomSource;
use crate::scalar::{NumericPolicy, Scalar};
use crate::set::{ElementId, ElementSet};

/// Largest ground set accepted by [`brute_force_opt`].
pub const BRUTE_FORCE_MAX_N: usize = 22;
/// Largest ground set accepted by [`check_matroid_axioms`].
pub const AXIOM_CHECK_MAX_N: usize = 16;
/// Largest ground set accepted by exhaustive value-oracle checks.
pub const EXHAUSTIVE_VALUE_MAX_N: usize = 16;
/// Triples drawn by sampled value-oracle checks.
pub const SAMPLED_TRIPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceResult<T> {
    pub opt_set: ElementSet,
    pub opt_value: T,
    pub enumerated_count: usize,
}

/// Exact maximum of `f` over all independent sets.
///
/// Depth-first enumeration in ascending id order; a branch stops as soon as
/// adding an element breaks independence, since every superset is then
/// dependent too. The first maximizer met in that order is returned.
pub fn brute_force_opt<T, F, M>(f: &F, m: &M) -> Result<BruteForceResult<T>>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    let n = m.ground_size();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::ScaleExceeded {
            what: "brute-force ground set",
            limit: BRUTE_FORCE_MAX_N,
            found: n,
        });
    }
    let empty = ElementSet::empty(n);
    let mut best = BruteForceResult {
        opt_value: f.eval(&empty),
        opt_set: empty.clone(),
        enumerated_count: 1,
    };
    let mut current = empty;
    descend(f, m, 0, &mut current, &mut best);
    Ok(best)
}

fn descend<T, F, M>(f: &F, m: &M, start: usize, current: &mut ElementSet, best: &mut BruteForceResult<T>)
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    for i in start..m.ground_size() {
        let u = ElementId(i);
        current.insert(u);
        if m.is_independent(current) {
            best.enumerated_count += 1;
            let value = f.eval(current);
            if value > best.opt_value {
                best.opt_value = value;
                best.opt_set = current.clone();
            }
            descend(f, m, i + 1, current, best);
        }
        current.remove(u);
    }
}

/// Every independent set of a small matroid, in depth-first ascending order.
pub fn independent_sets<M: Matroid + ?Sized>(m: &M) -> Result<Vec<ElementSet>> {
    let n = m.ground_size();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::ScaleExceeded {
            what: "enumerated ground set",
            limit: BRUTE_FORCE_MAX_N,
            found: n,
        });
    }
    fn walk<M: Matroid + ?Sized>(m: &M, start: usize, cur: &mut ElementSet, out: &mut Vec<ElementSet>) {
        for i in start..m.ground_size() {
            cur.insert(ElementId(i));
            if m.is_independent(cur) {
                out.push(cur.clone());
                walk(m, i + 1, cur, out);
            }
            cur.remove(ElementId(i));
        }
    }
    let mut out = vec![ElementSet::empty(n)];
    let mut cur = ElementSet::empty(n);
    walk(m, 0, &mut cur, &mut out);
    Ok(out)
}

/// Witness for the approximate local-optimality inequality
/// `Σ_{v∈T} f(v | S − v) − Σ_{u∈S} f(u | S − u) ≤ bound` for all independent `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalOptCertificate<T> {
    /// An independent set maximizing the left-hand side.
    pub witness: ElementSet,
    pub gap: T,
    pub bound: T,
}

impl<T: Scalar> LocalOptCertificate<T> {
    pub fn passes(&self, policy: &NumericPolicy) -> bool {
        policy.ge(&self.bound, &self.gap)
    }
}

/// Per-element weights `w_v = f(v | S − v)` for every `v` in the ground set.
pub(crate) fn removal_weights<T, F>(f: &F, s: &ElementSet) -> (Vec<T>, T)
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
{
    let cursor = f.cursor(s.clone());
    let mut in_set = T::zero();
    let weights = (0..f.ground_size())
        .map(ElementId)
        .map(|v| {
            let w = cursor.loss(v);
            if s.contains(v) {
                in_set = in_set.clone() + w.clone();
            }
            w
        })
        .collect();
    (weights, in_set)
}

/// Computes the largest left-hand side of the local-optimality inequality over
/// all independent `T`.
///
/// The left-hand side is linear in `T` with weights `w_v = f(v | S − v)`, so
/// the greedy maximum-weight independent set attains the maximum and the
/// certificate holds for every `T` once `gap ≤ bound`.
pub fn localopt_gap<T, F, M>(f: &F, m: &M, s: &ElementSet, bound: T) -> Result<LocalOptCertificate<T>>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    check_universe(m, s)?;
    if !m.is_independent(s) {
        return Err(Error::Dependent);
    }
    let (weights, in_set) = removal_weights(f, s);
    let witness = max_weight_independent(m, &weights);
    let total = witness
        .iter()
        .fold(T::zero(), |acc, v| acc + weights[v.index()].clone());
    Ok(LocalOptCertificate {
        witness,
        gap: total - in_set,
        bound,
    })
}

/// The same maximum as [`localopt_gap`], by enumerating every independent set.
pub fn exhaustive_localopt_gap<T, F, M>(f: &F, m: &M, s: &ElementSet) -> Result<T>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    let (weights, in_set) = removal_weights(f, s);
    let best = independent_sets(m)?
        .iter()
        .map(|t| t.iter().fold(T::zero(), |acc, v| acc + weights[v.index()].clone()))
        .fold(T::zero(), T::max_of);
    Ok(best - in_set)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidReport {
    pub independent_sets: usize,
    pub rank: usize,
    pub violation: Option<AxiomViolation>,
}

impl MatroidReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustive check of the matroid axioms on a ground set of at most 16.
pub fn check_matroid_axioms<M: Matroid + ?Sized>(m: &M) -> Result<MatroidReport> {
    let n = m.ground_size();
    if n > AXIOM_CHECK_MAX_N {
        return Err(Error::ScaleExceeded {
            what: "axiom-check ground set",
            limit: AXIOM_CHECK_MAX_N,
            found: n,
        });
    }
    let table: Vec<bool> = (0..1u64 << n)
        .map(|mask| m.is_independent(&ElementSet::from_mask(n, mask)))
        .collect();
    let (independent_sets, violation) = check_family(n, |mask| table[mask as usize]);
    let rank = (0..table.len())
        .filter(|&mask| table[mask])
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0);
    Ok(MatroidReport {
        independent_sets,
        rank,
        violation,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Every subset; ground set at most 16.
    Exhaustive,
    /// Random `(S ⊆ T, u ∉ T)` triples.
    Sampled { triples: usize },
}

impl CheckMode {
    pub fn sampled() -> Self {
        CheckMode::Sampled {
            triples: SAMPLED_TRIPLES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueViolation {
    Negative {
        set: Vec<usize>,
    },
    NotMonotone {
        smaller: Vec<usize>,
        larger: Vec<usize>,
    },
    NotSubmodular {
        smaller: Vec<usize>,
        larger: Vec<usize>,
        element: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueOracleReport {
    pub checks: usize,
    pub violation: Option<ValueViolation>,
}

impl ValueOracleReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks non-negativity, monotonicity and submodularity (`f(u|S) ≥ f(u|T)`
/// for `S ⊆ T`, `u ∉ T`).
pub fn check_value_oracle<T, F>(f: &F, mode: CheckMode, rng: &mut RandomSource) -> Result<ValueOracleReport>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
{
    let policy = NumericPolicy::for_scalar::<T>();
    let n = f.ground_size();
    match mode {
        CheckMode::Exhaustive => {
            if n > EXHAUSTIVE_VALUE_MAX_N {
                return Err(Error::ScaleExceeded {
                    what: "exhaustive value check ground set",
                    limit: EXHAUSTIVE_VALUE_MAX_N,
                    found: n,
                });
            }
            let table: Vec<T> = (0..1u64 << n).map(|m| f.eval(&ElementSet::from_mask(n, m))).collect();
            let members = |m: u64| ElementSet::from_mask(n, m).indices();
            let mut checks = 0;
            for s in 0..1u64 << n {
                checks += 1;
                if !policy.ge(&table[s as usize], &T::zero()) {
                    return Ok(ValueOracleReport {
                        checks,
                        violation: Some(ValueViolation::Negative { set: members(s) }),
                    });
                }
                for u in (0..n).filter(|&u| s >> u & 1 == 0) {
                    checks += 1;
                    let su = s | 1 << u;
                    if !policy.ge(&table[su as usize], &table[s as usize]) {
                        return Ok(ValueOracleReport {
                            checks,
                            violation: Some(ValueViolation::NotMonotone {
                                smaller: members(s),
                                larger: members(su),
                            }),
                        });
                    }
                    let gain = table[su as usize].clone() - table[s as usize].clone();
                    for w in (0..n).filter(|&w| w != u && s >> w & 1 == 0) {
                        checks += 1;
                        let sw = s | 1 << w;
                        let later = table[(sw | 1 << u) as usize].clone() - table[sw as usize].clone();
                        if !policy.ge(&gain, &later) {
                            return Ok(ValueOracleReport {
                                checks,
                                violation: Some(ValueViolation::NotSubmodular {
                                    smaller: members(s),
                                    larger: members(sw),
                                    element: u,
                                }),
                            });
                        }
                    }
                }
            }
            Ok(ValueOracleReport {
                checks,
                violation: None,
            })
        }
        CheckMode::Sampled { triples } => {
            let mut checks = 0;
            for _ in 0..triples {
                let mut small = ElementSet::empty(n);
                let mut large = ElementSet::empty(n);
                for u in (0..n).map(ElementId) {
                    match rng.below(4) {
                        0 => {
                            small.insert(u);
                            large.insert(u);
                        }
                        1 => {
                            large.insert(u);
                        }
                        _ => {}
                    }
                }
                let outside = large.complement().to_vec();
                if outside.is_empty() {
                    continue;
                }
                let u = outside[rng.below(outside.len())];
                checks += 1;
                let (fs, ft) = (f.eval(&small), f.eval(&large));
                if !policy.ge(&fs, &T::zero()) {
                    return Ok(ValueOracleReport {
                        checks,
                        violation: Some(ValueViolation::Negative { set: small.indices() }),
                    });
                }
                if !policy.ge(&ft, &fs) {
                    return Ok(ValueOracleReport {
                        checks,
                        violation: Some(ValueViolation::NotMonotone {
                            smaller: small.indices(),
                            larger: large.indices(),
                        }),
                    });
                }
                let early = f.eval(&small.with(u)) - fs;
                let late = f.eval(&large.with(u)) - ft;
                if !policy.ge(&early, &late) {
                    return Ok(ValueOracleReport {
                        checks,
                        violation: Some(ValueViolation::NotSubmodular {
                            smaller: small.indices(),
                            larger: large.indices(),
                            element: u.index(),
                        }),
                    });
                }
            }
            Ok(ValueOracleReport {
                checks,
                violation: None,
            })
        }
    }
}

/// `(1 − (1 + 1/ℓ)^{−ℓ})`, the factor the guide guarantees against `f(OPT)`.
pub fn level_factor(levels: usize) -> f64 {
    1.0 - crate::objective::decay(levels)
}

/// `(1 − (1+1/ℓ)^{−ℓ})·f(OPT) + (1+1/ℓ)^{−ℓ}·f(∅) − ε·f(OPT)`.
pub fn lifted_guarantee(levels: usize, epsilon: f64, opt: f64, empty: f64) -> f64 {
    let d = crate::objective::decay(levels);
    (1.0 - d) * opt + d * empty - epsilon * opt
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApproximationReport {
    pub value: f64,
    pub opt_value: f64,
    /// `f(S) / f(OPT)`, or 1 when `f(OPT) = 0`.
    pub ratio: f64,
    /// `(1 − (1 + 1/ℓ)^{−ℓ}) − ε`.
    pub target: f64,
    pub passed: bool,
}

/// Compares a solver's output against the exhaustive optimum.
pub fn approximation_report<T: Scalar>(
    output: &ElementSet,
    value: &T,
    truth: &BruteForceResult<T>,
    epsilon: f64,
    levels: usize,
) -> Result<ApproximationReport> {
    if output.universe_size() != truth.opt_set.universe_size() {
        return Err(Error::UniverseMismatch {
            expected: truth.opt_set.universe_size(),
            found: output.universe_size(),
        });
    }
    let value = value.to_real();
    let opt_value = truth.opt_value.to_real();
    let ratio = if opt_value == 0.0 { 1.0 } else { value / opt_value };
    let target = level_factor(levels) - epsilon;
    let passed = NumericPolicy::for_scalar::<f64>().ge(&ratio, &target);
    Ok(ApproximationReport {
        value,
        opt_value,
        ratio,
        target,
        passed,
    })
}

/// `n·r·(1 + log₂ r)`, the deterministic query-count scale.
pub fn deterministic_query_scale(n: usize, r: usize) -> f64 {
    n as f64 * r as f64 * (1.0 + (r.max(1) as f64).log2())
}

/// `(n + r·⌈√n⌉)·(1 + log₂ r)`, the randomized query-count scale.
pub fn randomized_query_scale(n: usize, r: usize) -> f64 {
    (n as f64 + r as f64 * ceil_sqrt(n) as f64) * (1.0 + (r.max(1) as f64).log2())
}

/// `⌈√n⌉` in integer arithmetic.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut s = (n as f64).sqrt() as usize;
    while s * s < n {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= n {
        s -= 1;
    }
    s
}

#[cfg(test)]
mod tests;
