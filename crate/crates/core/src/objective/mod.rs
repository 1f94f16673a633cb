//! Value oracles, marginals and the auxiliary guide functions.

mod alpha;
mod concave;
mod coverage;
mod lifted;
mod modular;
mod regularized;

pub use alpha::{decay, AlphaSchedule};
pub use concave::{ConcaveMap, ConcaveOfModular};
pub use coverage::CoverageFunction;
pub use lifted::{g_eval, GPrime, LiftedCursor};
pub use modular::{LinearRegularizer, ModularFunction};
pub use regularized::RegularizedGuide;

use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};

/// Value oracle for a set function `f: 2^N → ℝ`.
///
/// Objectives handed to the solvers are expected to be non-negative, monotone
/// and submodular; [`crate::verify::check_value_oracle`] tests those
/// properties on small ground sets.
pub trait ValueOracle<T: Scalar>: Send + Sync {
    fn ground_size(&self) -> usize;

    fn eval(&self, set: &ElementSet) -> T;

    /// A cursor positioned at `set` for incremental marginal evaluation.
    ///
    /// The default cursor caches `f(S)` and spends one evaluation per marginal
    /// or move. Oracles with internal structure override this.
    fn cursor(&self, set: ElementSet) -> Box<dyn Cursor<T> + '_> {
        Box::new(PlainCursor::new(self, set))
    }
}

/// Marginal evaluation relative to a current solution `S` that changes by
/// single-element moves.
pub trait Cursor<T> {
    fn set(&self) -> &ElementSet;

    /// `f(S)`.
    fn value(&self) -> T;

    /// `f(v | S)`; zero when `v ∈ S`.
    fn gain(&self, v: ElementId) -> T;

    /// `f(u | S − u)`; equal to [`gain`](Self::gain) when `u ∉ S`.
    fn loss(&self, u: ElementId) -> T;

    fn insert(&mut self, v: ElementId);

    fn remove(&mut self, u: ElementId);

    /// `S ← S − out + into`.
    fn swap(&mut self, out: ElementId, into: ElementId) {
        self.remove(out);
        self.insert(into);
    }
}

/// Cursor that only knows how to call `eval`.
pub struct PlainCursor<'a, T, O: ?Sized> {
    oracle: &'a O,
    set: ElementSet,
    value: T,
}

impl<'a, T: Scalar, O: ValueOracle<T> + ?Sized> PlainCursor<'a, T, O> {
    pub fn new(oracle: &'a O, set: ElementSet) -> Self {
        let value = oracle.eval(&set);
        Self { oracle, set, value }
    }
}

impl<T: Scalar, O: ValueOracle<T> + ?Sized> Cursor<T> for PlainCursor<'_, T, O> {
    fn set(&self) -> &ElementSet {
        &self.set
    }

    fn value(&self) -> T {
        self.value.clone()
    }

    fn gain(&self, v: ElementId) -> T {
        if self.set.contains(v) {
            return T::zero();
        }
        self.oracle.eval(&self.set.with(v)) - self.value.clone()
    }

    fn loss(&self, u: ElementId) -> T {
        if !self.set.contains(u) {
            return self.gain(u);
        }
        self.value.clone() - self.oracle.eval(&self.set.without(u))
    }

    fn insert(&mut self, v: ElementId) {
        if self.set.insert(v) {
            self.value = self.oracle.eval(&self.set);
        }
    }

    fn remove(&mut self, u: ElementId) {
        if self.set.remove(u) {
            self.value = self.oracle.eval(&self.set);
        }
    }

    fn swap(&mut self, out: ElementId, into: ElementId) {
        self.set.remove(out);
        self.set.insert(into);
        self.value = self.oracle.eval(&self.set);
    }
}

impl<T: Scalar, O: ValueOracle<T> + ?Sized> ValueOracle<T> for &O {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn eval(&self, set: &ElementSet) -> T {
        (**self).eval(set)
    }

    fn cursor(&self, set: ElementSet) -> Box<dyn Cursor<T> + '_> {
        (**self).cursor(set)
    }
}

impl<T: Scalar, O: ValueOracle<T> + ?Sized> ValueOracle<T> for Box<O> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn eval(&self, set: &ElementSet) -> T {
        (**self).eval(set)
    }

    fn cursor(&self, set: ElementSet) -> Box<dyn Cursor<T> + '_> {
        (**self).cursor(set)
    }
}

/// `f(u | S) = f(S + u) − f(S)`. Zero without any query when `u ∈ S`.
pub fn marginal<T: Scalar, F: ValueOracle<T> + ?Sized>(f: &F, u: ElementId, s: &ElementSet) -> T {
    if s.contains(u) {
        return T::zero();
    }
    f.eval(&s.with(u)) - f.eval(s)
}

/// `f(u | S − u)`.
pub fn marginal_without<T: Scalar, F: ValueOracle<T> + ?Sized>(f: &F, u: ElementId, s: &ElementSet) -> T {
    let rest = s.without(u);
    f.eval(&rest.with(u)) - f.eval(&rest)
}
