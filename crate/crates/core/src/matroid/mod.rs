//! Matroid independence oracles and the greedy/exchange routines built on them.
//!
//! Every routine here talks to a matroid only through
//! [`Matroid::is_independent`], so wrapping an oracle with
//! [`with_counting`](crate::ledger::with_counting) measures exactly the
//! independence queries each routine issues.

mod axioms;
mod bijection;
mod explicit;
mod graphic;
mod lifted;
mod partition;
mod uniform;

pub use axioms::{check_family, AxiomViolation};
pub use bijection::exchange_bijection;
pub use explicit::ExplicitMatroid;
pub use graphic::GraphicMatroid;
pub use lifted::{levels_mask, LiftedElement, LiftedLayout, LiftedMatroid, MAX_LEVELS};
pub use partition::PartitionMatroid;
pub use uniform::UniformMatroid;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};

/// Independence oracle over the ground set `[0, ground_size())`.
///
/// Implementations must describe a matroid: the empty set is independent,
/// independence is closed under subsets, and the exchange axiom holds.
pub trait Matroid: Send + Sync {
    fn ground_size(&self) -> usize;

    fn is_independent(&self, set: &ElementSet) -> bool;
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        (**self).is_independent(set)
    }
}

impl<M: Matroid + ?Sized> Matroid for Box<M> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        (**self).is_independent(set)
    }
}

pub(crate) fn check_universe<M: Matroid + ?Sized>(m: &M, set: &ElementSet) -> Result<()> {
    if set.universe_size() != m.ground_size() {
        return Err(Error::UniverseMismatch {
            expected: m.ground_size(),
            found: set.universe_size(),
        });
    }
    Ok(())
}

/// Completes an independent set to a base with a single ascending pass over
/// the ground set (one independence query per element outside `set`, plus one
/// query to validate `set`).
pub fn extend_to_base<M: Matroid + ?Sized>(m: &M, set: &ElementSet) -> Result<ElementSet> {
    check_universe(m, set)?;
    if !m.is_independent(set) {
        return Err(Error::Dependent);
    }
    Ok(extend_unchecked(m, set.clone()))
}

/// The pass of [`extend_to_base`] without validating the start set.
pub(crate) fn extend_unchecked<M: Matroid + ?Sized>(m: &M, mut base: ElementSet) -> ElementSet {
    for u in (0..m.ground_size()).map(ElementId) {
        if base.contains(u) {
            continue;
        }
        base.insert(u);
        if !m.is_independent(&base) {
            base.remove(u);
        }
    }
    base
}

/// Rank of the matroid, i.e. the size of any base.
pub fn rank<M: Matroid + ?Sized>(m: &M) -> usize {
    extend_unchecked(m, ElementSet::empty(m.ground_size())).len()
}

/// Greedy maximum-weight independent set.
///
/// Elements are scanned in non-increasing weight order (ties by ascending id)
/// and added whenever independence is preserved. Negative-weight elements are
/// never added; zero-weight ones are, so all-zero weights yield a base.
pub fn max_weight_independent<M, T>(m: &M, weights: &[T]) -> ElementSet
where
    M: Matroid + ?Sized,
    T: Scalar,
{
    assert_eq!(weights.len(), m.ground_size(), "one weight per element");
    let mut order: Vec<usize> = (0..weights.len()).filter(|&i| !weights[i].is_negative()).collect();
    order.sort_by(|&a, &b| {
        weights[b]
            .partial_cmp(&weights[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    let mut chosen = ElementSet::empty(m.ground_size());
    for i in order {
        chosen.insert(ElementId(i));
        if !m.is_independent(&chosen) {
            chosen.remove(ElementId(i));
        }
    }
    chosen
}

/// Finds `u ∈ argmin { w_u : u ∈ S', S + v - u independent }` by binary search.
///
/// `candidates` lists `S'` with its weights. The caller guarantees that `S` is
/// independent, `S + v` is dependent and `(S \ S') + v` is independent; under
/// those conditions at most `⌈log₂ |S'|⌉` independence queries are issued.
/// Among equal weights the smallest id wins.
///
/// The candidates are ordered by non-decreasing weight; the search locates the
/// smallest position `i` such that `(S \ S') + v` together with the suffix
/// starting at `i` is independent and returns the candidate just before it.
pub fn min_weight_exchange<M, T>(
    m: &M,
    s: &ElementSet,
    candidates: &[(ElementId, T)],
    v: ElementId,
) -> Result<ElementId>
where
    M: Matroid + ?Sized,
    T: Scalar,
{
    check_universe(m, s)?;
    if candidates.is_empty() {
        return Err(Error::ExchangePrecondition("empty candidate set"));
    }
    if s.contains(v) {
        return Err(Error::ExchangePrecondition("v already in S"));
    }
    let mut sorted: Vec<&(ElementId, T)> = candidates.iter().collect();
    sorted.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal).then(a.0.cmp(&b.0)));
    let mut rest = s.clone();
    for (u, _) in &sorted {
        if !rest.remove(*u) {
            return Err(Error::ExchangePrecondition("candidate not in S or repeated"));
        }
    }
    rest.insert(v);

    // Positions are 1-based: position k+1 means the bare (S \ S') + v, which is
    // independent by assumption; position 1 means S + v, dependent by
    // assumption. Invariant: lo is dependent, hi is independent.
    let k = sorted.len();
    let (mut lo, mut hi) = (1usize, k + 1);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let mut probe = rest.clone();
        for (u, _) in &sorted[mid - 1..] {
            probe.insert(*u);
        }
        if m.is_independent(&probe) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(sorted[hi - 2].0)
}
