//! Scalar abstraction shared by every oracle and solver.
//!
//! Objective values, weights and thresholds are generic over [`Scalar`], which
//! is implemented for `f32`, `f64` and the exact [`BigRational`]. Exact runs
//! compare with zero slack; floating-point runs use a relative slack of
//! `RELATIVE_SLACK * max(1, |lhs|, |rhs|)`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Num + Signed + PartialOrd + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Default relative comparison slack. Zero for exact types.
    const RELATIVE_SLACK: f64;

    /// Square root, rounded for types without an exact root.
    fn sqrt(&self) -> Self;

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable as scalar")
    }

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer representable as scalar")
    }

    /// Conversion of a real parameter such as epsilon. Exact types take the
    /// exact binary value of the float.
    fn from_real(v: f64) -> Self {
        Self::from_f64(v).expect("finite real parameter")
    }

    fn to_real(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn max_of(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }

    fn min_of(a: Self, b: Self) -> Self {
        if b < a {
            b
        } else {
            a
        }
    }
}

impl Scalar for f32 {
    const RELATIVE_SLACK: f64 = 1e-5;

    fn sqrt(&self) -> Self {
        f32::sqrt(*self)
    }
}

impl Scalar for f64 {
    const RELATIVE_SLACK: f64 = 1e-9;

    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
}

impl Scalar for BigRational {
    const RELATIVE_SLACK: f64 = 0.0;

    fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        // Newton iteration from a float seed; 1e-15 relative is enough for
        // the concave test family.
        let mut x = BigRational::from_float(self.to_f64().unwrap_or(0.0).sqrt())
            .unwrap_or_else(|| BigRational::from_integer(BigInt::from(1)));
        let two = BigRational::from_integer(BigInt::from(2));
        for _ in 0..2 {
            x = (&x + self / &x) / &two;
            x = BigRational::from_float(x.to_f64().unwrap_or(0.0)).unwrap_or(x);
        }
        x
    }
}

/// Threshold comparisons used by all solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericPolicy {
    pub comparison_slack: f64,
}

impl Default for NumericPolicy {
    fn default() -> Self {
        Self { comparison_slack: 0.0 }
    }
}

impl NumericPolicy {
    pub fn exact() -> Self {
        Self::default()
    }

    /// The default policy for scalar type `T`.
    pub fn for_scalar<T: Scalar>() -> Self {
        Self {
            comparison_slack: T::RELATIVE_SLACK,
        }
    }

    fn tolerance<T: Scalar>(&self, lhs: &T, rhs: &T) -> Option<T> {
        if self.comparison_slack == 0.0 {
            return None;
        }
        let scale = T::max_of(T::max_of(T::one(), lhs.abs()), rhs.abs());
        Some(T::from_real(self.comparison_slack) * scale)
    }

    /// `lhs >= rhs` up to slack.
    pub fn ge<T: Scalar>(&self, lhs: &T, rhs: &T) -> bool {
        match self.tolerance(lhs, rhs) {
            None => lhs >= rhs,
            Some(tol) => lhs.clone() + tol >= *rhs,
        }
    }

    /// `lhs > rhs` by more than the slack.
    pub fn gt<T: Scalar>(&self, lhs: &T, rhs: &T) -> bool {
        match self.tolerance(lhs, rhs) {
            None => lhs > rhs,
            Some(tol) => lhs.clone() > rhs.clone() + tol,
        }
    }

    /// Swap acceptance against a threshold: `gain >= threshold`, except that a
    /// zero threshold demands strictly positive gain so the search terminates.
    pub fn meets_threshold<T: Scalar>(&self, gain: &T, threshold: &T) -> bool {
        if threshold.is_zero() {
            self.gt(gain, threshold)
        } else {
            self.ge(gain, threshold)
        }
    }
}
