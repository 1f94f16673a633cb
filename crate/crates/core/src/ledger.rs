//! Oracle query accounting.

use std::ops::Sub;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::matroid::Matroid;
use crate::objective::{Cursor, ValueOracle};
use crate::scalar::Scalar;
use crate::set::ElementSet;

/// Monotone counters of value and independence oracle invocations.
///
/// Counters are atomic so a ledger can be shared by oracles used from several
/// threads. They are never reset; take a [`snapshot`](Self::snapshot) and
/// subtract to measure a window.
#[derive(Debug, Default)]
pub struct QueryLedger {
    value: AtomicU64,
    independence: AtomicU64,
}

/// Point-in-time copy of a [`QueryLedger`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerSnapshot {
    pub value_queries: u64,
    pub independence_queries: u64,
}

impl LedgerSnapshot {
    pub fn total(&self) -> u64 {
        self.value_queries + self.independence_queries
    }
}

impl Sub for LedgerSnapshot {
    type Output = LedgerSnapshot;

    fn sub(self, earlier: LedgerSnapshot) -> LedgerSnapshot {
        LedgerSnapshot {
            value_queries: self.value_queries - earlier.value_queries,
            independence_queries: self.independence_queries - earlier.independence_queries,
        }
    }
}

impl QueryLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record_value(&self) {
        self.value.fetch_add(1, Ordering::Relaxed);
    }

    pub fn record_independence(&self) {
        self.independence.fetch_add(1, Ordering::Relaxed);
    }

    pub fn value_queries(&self) -> u64 {
        self.value.load(Ordering::Relaxed)
    }

    pub fn independence_queries(&self) -> u64 {
        self.independence.load(Ordering::Relaxed)
    }

    pub fn snapshot(&self) -> LedgerSnapshot {
        LedgerSnapshot {
            value_queries: self.value_queries(),
            independence_queries: self.independence_queries(),
        }
    }
}

/// An oracle wrapper that records every query in a ledger.
///
/// Wrapping a [`ValueOracle`] counts `eval` calls; wrapping a [`Matroid`]
/// counts `is_independent` calls. Answers are forwarded unchanged.
#[derive(Debug)]
pub struct Counting<'a, O: ?Sized> {
    inner: &'a O,
    ledger: &'a QueryLedger,
}

impl<O: ?Sized> Clone for Counting<'_, O> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<O: ?Sized> Copy for Counting<'_, O> {}

/// Wraps `oracle` so that each query increments the matching `ledger` counter.
pub fn with_counting<'a, O: ?Sized>(oracle: &'a O, ledger: &'a QueryLedger) -> Counting<'a, O> {
    Counting { inner: oracle, ledger }
}

impl<'a, O: ?Sized> Counting<'a, O> {
    pub fn inner(&self) -> &'a O {
        self.inner
    }

    pub fn ledger(&self) -> &'a QueryLedger {
        self.ledger
    }
}

impl<T: Scalar, O: ValueOracle<T> + ?Sized> ValueOracle<T> for Counting<'_, O> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn eval(&self, set: &ElementSet) -> T {
        self.ledger.record_value();
        self.inner.eval(set)
    }

    // Uses the plain cursor over the counted oracle: every evaluation made on
    // behalf of a cursor is an actual counted invocation.
    fn cursor(&self, set: ElementSet) -> Box<dyn Cursor<T> + '_> {
        Box::new(crate::objective::PlainCursor::new(self, set))
    }
}

impl<O: Matroid + ?Sized> Matroid for Counting<'_, O> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        self.ledger.record_independence();
        self.inner.is_independent(set)
    }
}
