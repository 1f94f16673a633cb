use crate::error::{Error, Result};
use crate::matroid::{extend_unchecked, rank, Matroid};
use crate::objective::{g_eval, AlphaSchedule, ValueOracle};
use crate::scalar::{NumericPolicy, Scalar};
use crate::set::{ElementId, ElementSet};

use super::{warm_start, WarmStart};

pub const IDEALIZED_MAX_N: usize = 16;
pub const IDEALIZED_MAX_RANK: usize = 6;

/// Exhaustive-move local search on `ℓ` disjoint parts guided by `g`.
///
/// The parts start as a warm-start base placed entirely in the first part.
/// Each round applies the first move that strictly increases `g`, trying in
/// order: moving an element to another part, then replacing an element by an
/// outside one placed in any part. Every candidate is evaluated in full, so
/// this is a small-scale reference only.
pub fn idealized_local_search<T, F, M>(f: &F, m: &M, levels: usize) -> Result<Vec<ElementSet>>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    let n = m.ground_size();
    if n > IDEALIZED_MAX_N {
        return Err(Error::ScaleExceeded {
            what: "idealized search ground set",
            limit: IDEALIZED_MAX_N,
            found: n,
        });
    }
    let r = rank(m);
    if r > IDEALIZED_MAX_RANK {
        return Err(Error::ScaleExceeded {
            what: "idealized search rank",
            limit: IDEALIZED_MAX_RANK,
            found: r,
        });
    }
    let alpha = AlphaSchedule::<T>::new(levels)?;
    let policy = NumericPolicy::for_scalar::<T>();
    let start = extend_unchecked(m, warm_start(f, m, WarmStart::ThresholdGreedy));
    let mut parts = vec![ElementSet::empty(n); levels];
    parts[0] = start;
    let mut value = g_eval(f, &alpha, &parts)?;

    loop {
        let mut improved = None;
        'search: for (k, j, u, v) in moves(m, &parts) {
            let mut next = parts.clone();
            next[k].remove(u);
            next[j].insert(v.unwrap_or(u));
            let candidate = g_eval(f, &alpha, &next)?;
            if policy.gt(&candidate, &value) {
                improved = Some((next, candidate));
                break 'search;
            }
        }
        match improved {
            Some((next, candidate)) => {
                parts = next;
                value = candidate;
            }
            None => return Ok(parts),
        }
    }
}

/// All moves `(from part, to part, leaving element, entering element)`;
/// `None` as entering element means the leaving element changes part.
fn moves<M: Matroid + ?Sized>(m: &M, parts: &[ElementSet]) -> Vec<(usize, usize, ElementId, Option<ElementId>)> {
    let n = m.ground_size();
    let union = parts.iter().fold(ElementSet::empty(n), |acc, p| acc.union(p));
    let mut out = Vec::new();
    for (k, part) in parts.iter().enumerate() {
        for u in part.iter() {
            for j in (0..parts.len()).filter(|&j| j != k) {
                out.push((k, j, u, None));
            }
        }
    }
    for (k, part) in parts.iter().enumerate() {
        for u in part.iter() {
            let rest = union.without(u);
            for v in (0..n).map(ElementId).filter(|v| !union.contains(*v)) {
                if m.is_independent(&rest.with(v)) {
                    for j in 0..parts.len() {
                        out.push((k, j, u, Some(v)));
                    }
                }
            }
        }
    }
    out
}
