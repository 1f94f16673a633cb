use crate::error::{Error, Result};
use crate::matroid::MAX_LEVELS;
use crate::scalar::Scalar;

/// Level weights `α_0, …, α_{ℓ+1}` of the auxiliary guide.
///
/// `α_i = (1 + 1/ℓ)^{i−1} / C(ℓ−1, i−1)` for `i ∈ [ℓ]`, with `α_0 = α_{ℓ+1} = 0`.
/// With these weights `α_i·i·(1 + 1/ℓ) = α_{i+1}·(ℓ − i)` for every `i < ℓ`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaSchedule<T> {
    levels: usize,
    coefficients: Vec<T>,
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl<T: Scalar> AlphaSchedule<T> {
    pub fn new(levels: usize) -> Result<Self> {
        if levels == 0 || levels > MAX_LEVELS {
            return Err(Error::InvalidLevels {
                found: levels,
                max: MAX_LEVELS,
            });
        }
        let ratio = T::from_count(levels + 1) / T::from_count(levels);
        let mut coefficients = Vec::with_capacity(levels + 2);
        coefficients.push(T::zero());
        let mut power = T::one();
        for i in 1..=levels {
            let c = binomial(levels as u64 - 1, i as u64 - 1);
            coefficients.push(power.clone() / T::from_u64(c).expect("binomial fits scalar"));
            power = power * ratio.clone();
        }
        coefficients.push(T::zero());
        Ok(Self { levels, coefficients })
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    /// `α_i` for `i ∈ [0, ℓ+1]`.
    pub fn get(&self, i: usize) -> &T {
        &self.coefficients[i]
    }

    /// `α_ℓ`.
    pub fn top(&self) -> &T {
        &self.coefficients[self.levels]
    }

    /// `Σ_{J ⊆ [ℓ]} α_{|J|}`, the multiplier of `f(∅)` in the guide.
    pub fn subset_sum(&self) -> T {
        (1..=self.levels).fold(T::zero(), |acc, i| {
            acc + T::from_u64(binomial(self.levels as u64, i as u64)).expect("binomial fits")
                * self.coefficients[i].clone()
        })
    }

    /// `α_i·i·(1 + 1/ℓ) − α_{i+1}·(ℓ − i)`, zero for every `i ∈ [ℓ − 1]`.
    pub fn telescoping_residual(&self, i: usize) -> T {
        let l = self.levels;
        let ratio = T::from_count(l + 1) / T::from_count(l);
        self.coefficients[i].clone() * T::from_count(i) * ratio
            - self.coefficients[i + 1].clone() * T::from_count(l - i)
    }
}

/// `(1 + 1/ℓ)^{−ℓ}`, the weight of `f(∅)` in the idealized guarantee.
pub fn decay(levels: usize) -> f64 {
    (1.0 + 1.0 / levels as f64).powi(-(levels as i32))
}
