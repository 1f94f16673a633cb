use std::collections::HashSet;

use super::{check_family, Matroid};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest ground set accepted by [`ExplicitMatroid`].
pub const EXPLICIT_MAX_N: usize = 20;

/// A matroid given by listing its independent sets. Validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitMatroid {
    n: usize,
    family: HashSet<u32>,
}

impl ExplicitMatroid {
    pub fn new(n: usize, independent_sets: &[Vec<usize>]) -> Result<Self> {
        if n > EXPLICIT_MAX_N {
            return Err(Error::ScaleExceeded {
                what: "explicit matroid ground set",
                limit: EXPLICIT_MAX_N,
                found: n,
            });
        }
        let mut family = HashSet::with_capacity(independent_sets.len());
        for s in independent_sets {
            let mut mask = 0u32;
            for &u in s {
                if u >= n {
                    return Err(Error::ElementOutOfRange {
                        element: u,
                        universe: n,
                    });
                }
                mask |= 1 << u;
            }
            family.insert(mask);
        }
        let (_, violation) = check_family(n, |m| family.contains(&(m as u32)));
        if let Some(v) = violation {
            return Err(Error::NotAMatroid(v.to_string()));
        }
        Ok(Self { n, family })
    }

    /// Builds the explicit family of any small matroid.
    pub fn from_oracle<M: Matroid + ?Sized>(m: &M) -> Result<Self> {
        let n = m.ground_size();
        if n > EXPLICIT_MAX_N {
            return Err(Error::ScaleExceeded {
                what: "explicit matroid ground set",
                limit: EXPLICIT_MAX_N,
                found: n,
            });
        }
        let family = (0..1u32 << n)
            .filter(|&mask| m.is_independent(&ElementSet::from_mask(n, mask as u64)))
            .collect();
        Ok(Self { n, family })
    }

    pub fn family_size(&self) -> usize {
        self.family.len()
    }
}

impl Matroid for ExplicitMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        let mask = set.iter().fold(0u32, |acc, u| acc | 1 << u.index());
        self.family.contains(&mask)
    }
}
