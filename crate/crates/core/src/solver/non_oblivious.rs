use crate::error::{Error, Result};
use crate::ledger::{with_counting, QueryLedger};
use crate::matroid::{LiftedLayout, LiftedMatroid, Matroid};
use crate::objective::{AlphaSchedule, GPrime, LinearRegularizer, RegularizedGuide, ValueOracle};
use crate::rng::RandomSource;
use crate::scalar::Scalar;
use crate::verify::localopt_gap;

use super::{det_local_search, rand_local_search, RunReport, SolverConfig, Variant};

/// Runs the chosen local search on the lifted ground set `N × [ℓ]`, guided
/// by `g'` with the schedule `α`, at accuracy `ε'`, and returns the projection
/// of the lifted solution. A randomized run that fails every attempt yields
/// the empty set.
///
/// Reported query counts are queries to `f` and to the matroid made by the
/// search; the certificate is computed afterwards and is not counted.
pub fn non_oblivious_solve<T, F, M>(f: &F, m: &M, config: &SolverConfig) -> Result<RunReport<T>>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    config.validate()?;
    check_sizes(f.ground_size(), m.ground_size())?;
    let ledger = QueryLedger::new();
    let counted = with_counting(f, &ledger);
    let alpha = AlphaSchedule::new(config.levels())?;
    let guide = GPrime::new(counted, alpha)?;
    let layout = guide.layout();
    let report = run_lifted(&guide, layout, m, &ledger, config)?;
    Ok(RunReport {
        objective_value: f.eval(&report.output_set),
        ..report
    })
}

/// [`non_oblivious_solve`] with the guide `g' + α_ℓ (ℓ + 1) ℓ'`, where `ℓ'`
/// extends the linear regularizer to the lifted ground set.
pub fn regularized_solve<T, F, M>(
    f: &F,
    regularizer: &LinearRegularizer<T>,
    m: &M,
    config: &SolverConfig,
) -> Result<RunReport<T>>
where
    T: Scalar,
    F: ValueOracle<T> + ?Sized,
    M: Matroid + ?Sized,
{
    config.validate()?;
    check_sizes(f.ground_size(), m.ground_size())?;
    check_sizes(f.ground_size(), regularizer.len())?;
    let ledger = QueryLedger::new();
    let counted = with_counting(f, &ledger);
    let alpha = AlphaSchedule::new(config.levels())?;
    let guide = RegularizedGuide::new(counted, alpha, regularizer.clone())?;
    let layout = guide.layout();
    let report = run_lifted(&guide, layout, m, &ledger, config)?;
    Ok(RunReport {
        objective_value: f.eval(&report.output_set),
        regularizer_value: Some(regularizer.value(&report.output_set)),
        ..report
    })
}

fn check_sizes(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::UniverseMismatch { expected, found })
    }
}

fn run_lifted<T, G, M>(
    guide: &G,
    layout: LiftedLayout,
    m: &M,
    ledger: &QueryLedger,
    config: &SolverConfig,
) -> Result<RunReport<T>>
where
    T: Scalar,
    G: ValueOracle<T>,
    M: Matroid + ?Sized,
{
    let counted_matroid = with_counting(m, ledger);
    let lifted = LiftedMatroid::new(counted_matroid, layout.levels())?;
    let epsilon_prime = config.epsilon_prime();
    let outcome = match config.variant {
        Variant::Deterministic => det_local_search(guide, &lifted, epsilon_prime, config.warm_start, None)?,
        Variant::Randomized => {
            let mut rng = RandomSource::new(config.seed);
            rand_local_search(
                guide,
                &lifted,
                epsilon_prime,
                config.warm_start,
                config.repetitions_override,
                &mut rng,
            )?
        }
    };
    let queries = ledger.snapshot();
    let failed = outcome.set.is_none();
    let lifted_set = outcome.set.unwrap_or_else(|| layout.empty());
    let certificate = if failed {
        None
    } else {
        let bound = T::from_real(epsilon_prime) * outcome.warm_start_value.clone();
        Some(localopt_gap(guide, &lifted, &lifted_set, bound)?)
    };
    Ok(RunReport {
        output_set: layout.project_all(&lifted_set),
        objective_value: T::zero(),
        regularizer_value: None,
        lifted_set,
        queries,
        iterations: outcome.iterations,
        attempts: outcome.attempts,
        failed,
        levels: layout.levels(),
        epsilon: config.epsilon,
        epsilon_prime,
        variant: config.variant,
        seed: config.seed,
        warm_start_value: outcome.warm_start_value,
        certificate,
    })
}
