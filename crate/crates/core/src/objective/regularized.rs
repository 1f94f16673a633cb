use super::{AlphaSchedule, Cursor, GPrime, LiftedCursor, LinearRegularizer, ValueOracle};
use crate::error::{Error, Result};
use crate::matroid::LiftedLayout;
use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};

/// Guide for maximizing `f + ℓ`: `g'(S) + α_ℓ·(ℓ + 1)·ℓ'(S)` where
/// `ℓ'(S) = Σ_{(u, j) ∈ S} ℓ({u})`.
///
/// With negative regularizer weights this guide need not be monotone or
/// non-negative; solvers treat it as an ordinary oracle.
#[derive(Debug, Clone)]
pub struct RegularizedGuide<F, T> {
    g: GPrime<F, T>,
    regularizer: LinearRegularizer<T>,
    coefficient: T,
}

impl<F, T> RegularizedGuide<F, T>
where
    T: Scalar,
    F: ValueOracle<T>,
{
    pub fn new(f: F, alpha: AlphaSchedule<T>, regularizer: LinearRegularizer<T>) -> Result<Self> {
        if regularizer.len() != f.ground_size() {
            return Err(Error::UniverseMismatch {
                expected: f.ground_size(),
                found: regularizer.len(),
            });
        }
        let coefficient = alpha.top().clone() * T::from_count(alpha.levels() + 1);
        Ok(Self {
            g: GPrime::new(f, alpha)?,
            regularizer,
            coefficient,
        })
    }

    pub fn layout(&self) -> LiftedLayout {
        self.g.layout()
    }

    /// `α_ℓ·(ℓ + 1)`.
    pub fn coefficient(&self) -> &T {
        &self.coefficient
    }

    pub fn guide(&self) -> &GPrime<F, T> {
        &self.g
    }

    fn lifted_weight(&self, x: ElementId) -> T {
        self.coefficient.clone() * self.regularizer.weight(self.g.layout().base_of(x)).clone()
    }
}

impl<F, T> ValueOracle<T> for RegularizedGuide<F, T>
where
    T: Scalar,
    F: ValueOracle<T>,
{
    fn ground_size(&self) -> usize {
        self.g.ground_size()
    }

    fn eval(&self, set: &ElementSet) -> T {
        set.iter().fold(self.g.eval(set), |acc, x| acc + self.lifted_weight(x))
    }

    fn cursor(&self, set: ElementSet) -> Box<dyn Cursor<T> + '_> {
        let linear = set.iter().fold(T::zero(), |acc, x| acc + self.lifted_weight(x));
        Box::new(RegularizedCursor {
            guide: self,
            inner: LiftedCursor::new(&self.g, set),
            linear,
        })
    }
}

struct RegularizedCursor<'a, F, T> {
    guide: &'a RegularizedGuide<F, T>,
    inner: LiftedCursor<'a, F, T>,
    linear: T,
}

impl<F, T> Cursor<T> for RegularizedCursor<'_, F, T>
where
    T: Scalar,
    F: ValueOracle<T>,
{
    fn set(&self) -> &ElementSet {
        self.inner.set()
    }

    fn value(&self) -> T {
        self.inner.value() + self.linear.clone()
    }

    fn gain(&self, x: ElementId) -> T {
        if self.inner.set().contains(x) {
            return T::zero();
        }
        self.inner.gain(x) + self.guide.lifted_weight(x)
    }

    fn loss(&self, x: ElementId) -> T {
        if !self.inner.set().contains(x) {
            return self.gain(x);
        }
        self.inner.loss(x) + self.guide.lifted_weight(x)
    }

    fn insert(&mut self, x: ElementId) {
        if !self.inner.set().contains(x) {
            self.linear = self.linear.clone() + self.guide.lifted_weight(x);
            self.inner.insert(x);
        }
    }

    fn remove(&mut self, x: ElementId) {
        if self.inner.set().contains(x) {
            self.linear = self.linear.clone() - self.guide.lifted_weight(x);
            self.inner.remove(x);
        }
    }
}
