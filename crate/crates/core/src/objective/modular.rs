use super::ValueOracle;
use crate::scalar::Scalar;
use crate::set::ElementSet;

/// Linear objective `f(S) = Σ_{u∈S} w_u` with non-negative weights.
#[derive(Debug, Clone, PartialEq)]
pub struct ModularFunction<T> {
    weights: Vec<T>,
}

impl<T: Scalar> ModularFunction<T> {
    pub fn new(weights: Vec<T>) -> Self {
        debug_assert!(weights.iter().all(|w| !w.is_negative()));
        Self { weights }
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }
}

impl<T: Scalar> ValueOracle<T> for ModularFunction<T> {
    fn ground_size(&self) -> usize {
        self.weights.len()
    }

    fn eval(&self, set: &ElementSet) -> T {
        set.iter()
            .fold(T::zero(), |acc, u| acc + self.weights[u.index()].clone())
    }
}

/// Additive function with weights of any sign, `ℓ(S) = Σ_{u∈S} ℓ({u})`.
///
/// Not a [`ValueOracle`]: it may be negative, and it is only ever combined
/// with a submodular objective.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearRegularizer<T> {
    weights: Vec<T>,
}

impl<T: Scalar> LinearRegularizer<T> {
    pub fn new(weights: Vec<T>) -> Self {
        Self { weights }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            weights: vec![T::zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, u: crate::set::ElementId) -> &T {
        &self.weights[u.index()]
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn value(&self, set: &ElementSet) -> T {
        set.iter()
            .fold(T::zero(), |acc, u| acc + self.weights[u.index()].clone())
    }
}
