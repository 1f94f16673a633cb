use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use nolsearch::format::{InstanceFile, ReportFile};
use nolsearch::matroid::rank;
use nolsearch::{non_oblivious_solve, regularized_solve, Exact, Scalar, SolverConfig};

use crate::{read_file, write_output, ScalarArg, VariantArg, WarmStartArg};

#[derive(Args)]
pub struct SolveArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Accuracy parameter in (0, 1).
    #[arg(long, short = 'e')]
    epsilon: f64,
    #[arg(long, value_enum, default_value = "deterministic")]
    variant: VariantArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report path, `-` for stdout.
    #[arg(long)]
    report: PathBuf,
    /// Number of levels; defaults to 1 + ceil(1/epsilon).
    #[arg(long)]
    levels: Option<usize>,
    #[arg(long, value_enum, default_value = "threshold")]
    warm_start: WarmStartArg,
    #[arg(long, value_enum, default_value = "f64")]
    scalar: ScalarArg,
    /// Number of randomized attempts (test hook).
    #[arg(long, hide = true)]
    repetitions: Option<usize>,
}

pub fn config(args: &SolveArgs) -> SolverConfig {
    let mut config = SolverConfig::new(args.epsilon, args.variant.into())
        .with_seed(args.seed)
        .with_warm_start(args.warm_start.into());
    config.levels_override = args.levels;
    config.repetitions_override = args.repetitions;
    config
}

pub fn solve_file<T: Scalar>(file: &InstanceFile, config: &SolverConfig, scalar: &str) -> anyhow::Result<ReportFile> {
    let instance = file.build::<T>()?;
    let run = match &instance.regularizer {
        Some(reg) => regularized_solve(&instance.objective, reg, &instance.matroid, config)?,
        None => non_oblivious_solve(&instance.objective, &instance.matroid, config)?,
    };
    Ok(ReportFile::from_run(
        &instance.name,
        rank(&instance.matroid),
        scalar,
        config.warm_start,
        &run,
    )?)
}

pub fn run(args: SolveArgs) -> anyhow::Result<ExitCode> {
    let file = InstanceFile::parse(&read_file(&args.instance)?)?;
    let config = config(&args);
    let name = args.scalar.name();
    let report = match args.scalar {
        ScalarArg::F64 => solve_file::<f64>(&file, &config, name)?,
        ScalarArg::F32 => solve_file::<f32>(&file, &config, name)?,
        ScalarArg::Exact => solve_file::<Exact>(&file, &config, name)?,
    };
    write_output(&args.report, &report.to_json())?;
    if report.failed {
        eprintln!("randomized search failed every attempt; reported the empty set");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}
