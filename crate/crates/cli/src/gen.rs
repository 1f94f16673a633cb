use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use nolsearch::format::{generate, GenerateOptions};

use crate::{write_output, FamilyArg};

#[derive(Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of partition blocks (partition family only; defaults to r).
    #[arg(long)]
    blocks: Option<usize>,
    /// Output path, `-` for stdout.
    #[arg(long)]
    out: PathBuf,
}

pub fn run(args: GenArgs) -> anyhow::Result<ExitCode> {
    let file = generate(
        args.family.into(),
        args.n,
        args.r,
        args.seed,
        GenerateOptions { blocks: args.blocks },
    )?;
    write_output(&args.out, &file.to_json())?;
    Ok(ExitCode::SUCCESS)
}
