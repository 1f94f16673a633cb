use super::ValueOracle;
use crate::scalar::Scalar;
use crate::set::ElementSet;

/// Concave non-decreasing map applied to a modular sum.
#[derive(Debug, Clone, PartialEq)]
pub enum ConcaveMap<T> {
    Sqrt,
    Cap(T),
}

impl<T: Scalar> ConcaveMap<T> {
    pub fn apply(&self, x: T) -> T {
        match self {
            ConcaveMap::Sqrt => x.sqrt(),
            ConcaveMap::Cap(c) => {
                if x > *c {
                    c.clone()
                } else {
                    x
                }
            }
        }
    }
}

/// `f(S) = φ(Σ_{u∈S} w_u)` for non-negative weights and concave `φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcaveOfModular<T> {
    weights: Vec<T>,
    map: ConcaveMap<T>,
}

impl<T: Scalar> ConcaveOfModular<T> {
    pub fn new(weights: Vec<T>, map: ConcaveMap<T>) -> Self {
        Self { weights, map }
    }
}

impl<T: Scalar> ValueOracle<T> for ConcaveOfModular<T> {
    fn ground_size(&self) -> usize {
        self.weights.len()
    }

    fn eval(&self, set: &ElementSet) -> T {
        let sum = set
            .iter()
            .fold(T::zero(), |acc, u| acc + self.weights[u.index()].clone());
        self.map.apply(sum)
    }
}
