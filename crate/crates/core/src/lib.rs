//! Non-oblivious local search for maximizing a non-negative monotone
//! submodular function subject to a matroid constraint.
//!
//! The crate provides
//!
//! - independence oracles ([`matroid`]) including the lifted matroid on
//!   `N × [ℓ]`, greedy linear maximization and the binary-search exchange,
//! - value oracles ([`objective`]) and the auxiliary guide `g'`,
//! - the solvers ([`solver`]): warm start, the idealized local search, the
//!   fast deterministic and randomized local searches and the end-to-end
//!   non-oblivious solver with its regularized variant,
//! - exhaustive verifiers and certificates ([`verify`]),
//! - instance/report file formats and generators ([`format`]).
//!
//! Everything numeric is generic over [`Scalar`]; `f64` is the working type
//! and [`Exact`] (arbitrary-precision rationals) gives exact runs on small
//! instances.

pub mod error;
pub mod format;
pub mod ledger;
pub mod matroid;
pub mod objective;
pub mod rng;
pub mod scalar;
pub mod set;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use ledger::{with_counting, Counting, LedgerSnapshot, QueryLedger};
pub use matroid::Matroid;
pub use objective::{Cursor, ValueOracle};
pub use rng::RandomSource;
pub use scalar::{NumericPolicy, Scalar};
pub use set::{ElementId, ElementSet};
pub use solver::{non_oblivious_solve, regularized_solve, RunReport, SolverConfig, Variant, WarmStart};

/// Exact scalar type.
pub type Exact = num_rational::BigRational;

pub type AlphaScheduleF64 = objective::AlphaSchedule<f64>;
pub type AlphaScheduleExact = objective::AlphaSchedule<Exact>;
pub type RunReportF64 = solver::RunReport<f64>;
pub type RunReportExact = solver::RunReport<Exact>;
pub type InstanceF64 = format::Instance<f64>;
pub type InstanceExact = format::Instance<Exact>;
pub type CertificateF64 = verify::LocalOptCertificate<f64>;
pub type BruteForceF64 = verify::BruteForceResult<f64>;
