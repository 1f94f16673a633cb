use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use nolsearch::format::{verify_report, InstanceFile, ReportFile, VerifyOptions, VerifyOutcome};
use nolsearch::{Exact, Scalar};

use crate::{read_file, ScalarArg};

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    report: PathBuf,
    /// Only re-check the certificate; skip the exhaustive optimum.
    #[arg(long)]
    certificate_only: bool,
    #[arg(long, value_enum, default_value = "f64")]
    scalar: ScalarArg,
}

fn check<T: Scalar>(file: &InstanceFile, report: &ReportFile, options: VerifyOptions) -> anyhow::Result<VerifyOutcome> {
    let instance = file.build::<T>()?;
    Ok(verify_report(&instance, report, options)?)
}

pub fn run(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let file = InstanceFile::parse(&read_file(&args.instance)?)?;
    let report = ReportFile::parse(&read_file(&args.report)?)?;
    let options = VerifyOptions {
        certificate_only: args.certificate_only,
    };
    let outcome = match args.scalar {
        ScalarArg::F64 => check::<f64>(&file, &report, options)?,
        ScalarArg::F32 => check::<f32>(&file, &report, options)?,
        ScalarArg::Exact => check::<Exact>(&file, &report, options)?,
    };
    for c in &outcome.checks {
        println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    Ok(if outcome.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
