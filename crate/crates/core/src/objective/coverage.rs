use fixedbitset::FixedBitSet;

use super::ValueOracle;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::set::ElementSet;

/// Weighted coverage: element `u` covers a subset of a finite universe of
/// points, and `f(S)` is the total weight of points covered by `S`.
///
/// Weights are integers, so values are exact in every scalar type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageFunction {
    point_weights: Vec<u64>,
    covers: Vec<FixedBitSet>,
}

impl CoverageFunction {
    pub fn new(point_weights: Vec<u64>, covers: Vec<Vec<usize>>) -> Result<Self> {
        let m = point_weights.len();
        let covers = covers
            .into_iter()
            .map(|points| {
                let mut bits = FixedBitSet::with_capacity(m);
                for p in points {
                    if p >= m {
                        return Err(Error::InvalidInstance(format!(
                            "covered point {p} outside universe of {m} points"
                        )));
                    }
                    bits.insert(p);
                }
                Ok(bits)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { point_weights, covers })
    }

    pub fn point_count(&self) -> usize {
        self.point_weights.len()
    }

    pub fn covered_weight(&self, set: &ElementSet) -> u64 {
        let mut covered = FixedBitSet::with_capacity(self.point_weights.len());
        for u in set.iter() {
            covered.union_with(&self.covers[u.index()]);
        }
        covered.ones().map(|p| self.point_weights[p]).sum()
    }
}

impl<T: Scalar> ValueOracle<T> for CoverageFunction {
    fn ground_size(&self) -> usize {
        self.covers.len()
    }

    fn eval(&self, set: &ElementSet) -> T {
        T::from_u64(self.covered_weight(set)).expect("coverage weight fits scalar")
    }
}
