//! `nolsearch` command-line front end.

mod bench;
mod gen;
mod solve;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use nolsearch::format::Family;
use nolsearch::{Variant, WarmStart};

#[derive(Parser)]
#[command(
    name = "nolsearch",
    version,
    about = "Non-oblivious local search for submodular maximization under a matroid"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded random instance.
    Gen(gen::GenArgs),
    /// Solve an instance and write a report.
    Solve(solve::SolveArgs),
    /// Re-check a report against its instance.
    Verify(verify::VerifyArgs),
    /// Run a grid of generated instances and write one CSV row per run.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Coverage,
    Partition,
    Graphic,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Coverage => Family::Coverage,
            FamilyArg::Partition => Family::Partition,
            FamilyArg::Graphic => Family::Graphic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    #[value(alias = "det")]
    Deterministic,
    #[value(alias = "rand")]
    Randomized,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Deterministic => Variant::Deterministic,
            VariantArg::Randomized => Variant::Randomized,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WarmStartArg {
    Threshold,
    Plain,
}

impl From<WarmStartArg> for WarmStart {
    fn from(w: WarmStartArg) -> Self {
        match w {
            WarmStartArg::Threshold => WarmStart::ThresholdGreedy,
            WarmStartArg::Plain => WarmStart::PlainGreedy,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScalarArg {
    F64,
    F32,
    Exact,
}

impl ScalarArg {
    pub fn name(self) -> &'static str {
        match self {
            ScalarArg::F64 => "f64",
            ScalarArg::F32 => "f32",
            ScalarArg::Exact => "exact",
        }
    }
}

pub fn read_file(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Writes `text` to `path`, or to stdout when the path is `-`.
pub fn write_output(path: &PathBuf, text: &str) -> anyhow::Result<()> {
    if path.as_os_str() == "-" {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => gen::run(args),
        Command::Solve(args) => solve::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Bench(args) => bench::run(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
