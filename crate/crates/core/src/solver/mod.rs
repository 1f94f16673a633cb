//! Local-search solvers: warm start, the idealized search over partitions,
//! the fast deterministic and randomized searches, and the end-to-end
//! non-oblivious solver on the lifted ground set.

mod deterministic;
mod idealized;
mod non_oblivious;
mod randomized;
mod warm_start;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ledger::LedgerSnapshot;
use crate::matroid::MAX_LEVELS;
use crate::set::ElementSet;
use crate::verify::LocalOptCertificate;

pub use deterministic::det_local_search;
pub use idealized::{idealized_local_search, IDEALIZED_MAX_N, IDEALIZED_MAX_RANK};
pub use non_oblivious::{non_oblivious_solve, regularized_solve};
pub use randomized::{rand_local_search, rand_local_search_once, repetitions_for, sample_sizes};
pub use warm_start::{plain_greedy, threshold_greedy, warm_start, THRESHOLD_DECAY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Deterministic,
    Randomized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WarmStart {
    /// Descending-threshold greedy.
    #[default]
    ThresholdGreedy,
    /// Best-marginal greedy until no element fits.
    PlainGreedy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub epsilon: f64,
    pub variant: Variant,
    pub seed: u64,
    pub levels_override: Option<usize>,
    pub warm_start: WarmStart,
    /// Replaces `⌈log₃(1/ε')⌉` as the number of randomized attempts.
    pub repetitions_override: Option<usize>,
}

impl SolverConfig {
    pub fn new(epsilon: f64, variant: Variant) -> Self {
        Self {
            epsilon,
            variant,
            seed: 0,
            levels_override: None,
            warm_start: WarmStart::default(),
            repetitions_override: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_levels(mut self, levels: usize) -> Self {
        self.levels_override = Some(levels);
        self
    }

    pub fn with_warm_start(mut self, warm_start: WarmStart) -> Self {
        self.warm_start = warm_start;
        self
    }

    pub fn with_repetitions(mut self, repetitions: usize) -> Self {
        self.repetitions_override = Some(repetitions);
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_epsilon(self.epsilon)?;
        let levels = self.levels();
        if levels == 0 || levels > MAX_LEVELS {
            return Err(Error::InvalidLevels {
                found: levels,
                max: MAX_LEVELS,
            });
        }
        Ok(())
    }

    /// `ℓ`, defaulting to `1 + ⌈1/ε⌉`.
    pub fn levels(&self) -> usize {
        self.levels_override.unwrap_or_else(|| default_levels(self.epsilon))
    }

    /// `ε' = ε / (e (1 + ln ℓ))`.
    pub fn epsilon_prime(&self) -> f64 {
        epsilon_prime(self.epsilon, self.levels())
    }
}

pub(crate) fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidEpsilon(epsilon))
    }
}

/// `1 + ⌈1/ε⌉`, computed so that exact reciprocals such as `1/0.2` do not
/// round up an extra step.
pub fn default_levels(epsilon: f64) -> usize {
    let inverse = 1.0 / epsilon;
    let nearest = inverse.round();
    let ceil = if (inverse - nearest).abs() <= 1e-9 * nearest.max(1.0) {
        nearest
    } else {
        inverse.ceil()
    };
    1 + ceil as usize
}

pub fn epsilon_prime(epsilon: f64, levels: usize) -> f64 {
    epsilon / (std::f64::consts::E * (1.0 + (levels as f64).ln()))
}

/// Result of one local search.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome<T> {
    /// The final set, or `None` when every randomized attempt failed.
    pub set: Option<ElementSet>,
    /// Scans for the deterministic search, sampling rounds for the randomized one.
    pub iterations: usize,
    /// Warm-start set before base completion.
    pub warm_start: ElementSet,
    pub warm_start_value: T,
    pub attempts: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport<T> {
    pub output_set: ElementSet,
    pub objective_value: T,
    /// `ℓ({u})` summed over the output, for regularized runs.
    pub regularizer_value: Option<T>,
    /// Set found on the lifted ground set `N × [ℓ]`.
    pub lifted_set: ElementSet,
    pub queries: LedgerSnapshot,
    pub iterations: usize,
    pub attempts: usize,
    pub failed: bool,
    pub levels: usize,
    pub epsilon: f64,
    pub epsilon_prime: f64,
    pub variant: Variant,
    pub seed: u64,
    /// Guide value of the warm start on the lifted ground set.
    pub warm_start_value: T,
    /// Local-optimality certificate for the guide on the lifted matroid, with
    /// bound `ε' · g'(S₀)`. Absent when the run failed.
    pub certificate: Option<LocalOptCertificate<T>>,
}
