use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ledger::LedgerSnapshot;
use crate::matroid::{LiftedElement, LiftedLayout, LiftedMatroid, Matroid};
use crate::objective::{AlphaSchedule, GPrime, RegularizedGuide, ValueOracle};
use crate::scalar::{NumericPolicy, Scalar};
use crate::set::ElementSet;
use crate::solver::{warm_start, RunReport, Variant, WarmStart};
use crate::verify::{approximation_report, brute_force_opt, independent_sets, lifted_guarantee, localopt_gap};

use super::{Instance, FORMAT_VERSION};

/// Which guide the search maximized on the lifted ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GuideKind {
    Plain,
    Regularized,
}

/// Certificate with lifted elements written as `[element, level]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateRecord {
    pub witness: Vec<[usize; 2]>,
    pub gap: f64,
    pub bound: f64,
}

/// On-disk solver report. Field order is fixed; there is no wall-clock data,
/// so identical runs produce identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub format_version: u32,
    pub instance: String,
    pub n: usize,
    pub rank: usize,
    pub scalar: String,
    pub variant: Variant,
    pub guide: GuideKind,
    pub warm_start: WarmStart,
    pub epsilon: f64,
    pub epsilon_prime: f64,
    pub levels: usize,
    pub seed: u64,
    pub failed: bool,
    pub attempts: usize,
    pub iterations: usize,
    pub queries: LedgerSnapshot,
    pub output_set: Vec<usize>,
    pub lifted_set: Vec<[usize; 2]>,
    pub objective_value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regularizer_value: Option<f64>,
    pub warm_start_value: f64,
    pub certificate: Option<CertificateRecord>,
}

fn lifted_pairs(layout: &LiftedLayout, set: &ElementSet) -> Vec<[usize; 2]> {
    set.iter()
        .map(|x| {
            let e = layout.unflatten(x);
            [e.base.index(), e.level]
        })
        .collect()
}

impl ReportFile {
    pub fn from_run<T: Scalar>(
        instance: &str,
        rank: usize,
        scalar: &str,
        warm: WarmStart,
        run: &RunReport<T>,
    ) -> Result<Self> {
        let layout = LiftedLayout::new(run.output_set.universe_size(), run.levels)?;
        Ok(Self {
            format_version: FORMAT_VERSION,
            instance: instance.to_string(),
            n: run.output_set.universe_size(),
            rank,
            scalar: scalar.to_string(),
            variant: run.variant,
            guide: if run.regularizer_value.is_some() {
                GuideKind::Regularized
            } else {
                GuideKind::Plain
            },
            warm_start: warm,
            epsilon: run.epsilon,
            epsilon_prime: run.epsilon_prime,
            levels: run.levels,
            seed: run.seed,
            failed: run.failed,
            attempts: run.attempts,
            iterations: run.iterations,
            queries: run.queries,
            output_set: run.output_set.indices(),
            lifted_set: lifted_pairs(&layout, &run.lifted_set),
            objective_value: run.objective_value.to_real(),
            regularizer_value: run.regularizer_value.as_ref().map(Scalar::to_real),
            warm_start_value: run.warm_start_value.to_real(),
            certificate: run.certificate.as_ref().map(|c| CertificateRecord {
                witness: lifted_pairs(&layout, &c.witness),
                gap: c.gap.to_real(),
                bound: c.bound.to_real(),
            }),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let report: ReportFile = serde_json::from_str(text).map_err(|e| Error::InvalidReport(e.to_string()))?;
        if report.format_version != FORMAT_VERSION {
            return Err(Error::InvalidReport(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                report.format_version
            )));
        }
        Ok(report)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Skip the exhaustive optimum and the approximation checks.
    pub certificate_only: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyOutcome {
    pub checks: Vec<Check>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(Check { name, passed, detail });
    }
}

/// Agreement of a recomputed value with one read back from a report.
fn close(recomputed: f64, recorded: f64) -> bool {
    (recomputed - recorded).abs() <= 1e-6 * recomputed.abs().max(recorded.abs()).max(1.0)
}

/// Re-derives everything a report claims from the instance alone.
///
/// Structural problems (wrong instance, malformed sets, a ground set too large
/// for the exhaustive optimum without `certificate_only`) are errors; every
/// other finding is a [`Check`].
pub fn verify_report<T: Scalar>(
    instance: &Instance<T>,
    report: &ReportFile,
    options: VerifyOptions,
) -> Result<VerifyOutcome> {
    let n = instance.n();
    if report.instance != instance.name || report.n != n {
        return Err(Error::InvalidReport(format!(
            "report is for {} (n = {}), instance is {} (n = {n})",
            report.instance, report.n, instance.name
        )));
    }
    if !options.certificate_only && n > crate::verify::BRUTE_FORCE_MAX_N {
        return Err(Error::ScaleExceeded {
            what: "brute-force ground set (use certificate-only verification)",
            limit: crate::verify::BRUTE_FORCE_MAX_N,
            found: n,
        });
    }
    let layout = LiftedLayout::new(n, report.levels)?;
    let to_lifted = |pairs: &[[usize; 2]]| -> Result<ElementSet> {
        let mut set = layout.empty();
        for &[u, level] in pairs {
            if u >= n || level == 0 || level > report.levels {
                return Err(Error::InvalidReport(format!(
                    "lifted element ({u}, {level}) out of range"
                )));
            }
            set.insert(layout.flatten(LiftedElement::new(u, level)));
        }
        Ok(set)
    };
    let lifted_set = to_lifted(&report.lifted_set)?;
    let output = ElementSet::from_indices(n, report.output_set.iter().copied())
        .map_err(|e| Error::InvalidReport(e.to_string()))?;

    let mut outcome = VerifyOutcome::default();
    let projected = layout.project_all(&lifted_set);
    outcome.push(
        "projection",
        projected == output,
        format!(
            "projection of lifted set {:?}, output set {:?}",
            projected.indices(),
            output.indices()
        ),
    );
    let lifted_matroid = LiftedMatroid::new(&instance.matroid, report.levels)?;
    let independent = instance.matroid.is_independent(&output) && lifted_matroid.is_independent(&lifted_set);
    outcome.push(
        "independence",
        independent,
        format!("output independent: {independent}"),
    );
    let value: T = instance.objective.eval(&output);
    outcome.push(
        "objective_value",
        close(value.to_real(), report.objective_value),
        format!("recomputed {}, recorded {}", value.to_real(), report.objective_value),
    );
    if report.failed {
        outcome.push(
            "search",
            false,
            "randomized search failed every attempt; output is empty".into(),
        );
        return Ok(outcome);
    }
    if !independent {
        return Ok(outcome);
    }

    let alpha = AlphaSchedule::<T>::new(report.levels)?;
    let guide: Box<dyn ValueOracle<T> + '_> = match (report.guide, &instance.regularizer) {
        (GuideKind::Plain, _) => Box::new(GPrime::new(&instance.objective, alpha)?),
        (GuideKind::Regularized, Some(reg)) => {
            Box::new(RegularizedGuide::new(&instance.objective, alpha, reg.clone())?)
        }
        (GuideKind::Regularized, None) => {
            return Err(Error::InvalidReport(
                "regularized report for an instance without regularizer".into(),
            ))
        }
    };
    let start = warm_start(&guide, &lifted_matroid, report.warm_start);
    let start_value = guide.eval(&start);
    outcome.push(
        "warm_start",
        close(start_value.to_real(), report.warm_start_value),
        format!(
            "recomputed {}, recorded {}",
            start_value.to_real(),
            report.warm_start_value
        ),
    );
    let bound = T::from_real(report.epsilon_prime) * start_value;
    let cert = localopt_gap(&guide, &lifted_matroid, &lifted_set, bound)?;
    let policy = NumericPolicy::for_scalar::<T>();
    let holds = cert.passes(&policy);
    let matches = report
        .certificate
        .as_ref()
        .is_some_and(|c| close(cert.gap.to_real(), c.gap) && close(cert.bound.to_real(), c.bound));
    outcome.push(
        "certificate",
        holds && matches,
        format!(
            "gap {} <= bound {}: {holds}; matches recorded certificate: {matches}",
            cert.gap.to_real(),
            cert.bound.to_real()
        ),
    );

    if options.certificate_only {
        return Ok(outcome);
    }
    match (report.guide, &instance.regularizer) {
        (GuideKind::Regularized, Some(reg)) => {
            let factor = 1.0 - (-1.0f64).exp() - report.epsilon;
            let lhs = value.to_real() + reg.value(&output).to_real();
            let worst = independent_sets(&instance.matroid)?
                .iter()
                .map(|t| {
                    let f_t: T = instance.objective.eval(t);
                    factor * f_t.to_real() + reg.value(t).to_real()
                })
                .fold(f64::NEG_INFINITY, f64::max);
            let fp = NumericPolicy::for_scalar::<f64>();
            outcome.push(
                "regularized_guarantee",
                fp.ge(&lhs, &worst),
                format!("f(S) + l(S) = {lhs}, largest (1 - 1/e - eps) f(T) + l(T) = {worst}"),
            );
        }
        _ => {
            let truth = brute_force_opt(&instance.objective, &instance.matroid)?;
            let empty: T = instance.objective.eval(&ElementSet::empty(n));
            let target = lifted_guarantee(
                report.levels,
                report.epsilon,
                truth.opt_value.to_real(),
                empty.to_real(),
            );
            let ratio = approximation_report(&output, &value, &truth, report.epsilon, report.levels)?;
            let fp = NumericPolicy::for_scalar::<f64>();
            outcome.push(
                "approximation",
                fp.ge(&value.to_real(), &target),
                format!(
                    "f(S) = {}, f(OPT) = {}, ratio {:.4} (target {:.4}), required f(S) >= {target:.4}",
                    value.to_real(),
                    truth.opt_value.to_real(),
                    ratio.ratio,
                    ratio.target
                ),
            );
        }
    }
    Ok(outcome)
}
