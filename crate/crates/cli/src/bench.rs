use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::Context;
use clap::Args;
use nolsearch::format::{generate, Family, GenerateOptions};
use nolsearch::verify::{brute_force_opt, ceil_sqrt, deterministic_query_scale, randomized_query_scale};
use nolsearch::{non_oblivious_solve, RunReport, SolverConfig, Variant};
use serde::Serialize;

use crate::{FamilyArg, VariantArg};

/// Rank of a grid point: a fixed number or `sqrt` for `⌈√n⌉`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankSpec {
    Fixed(usize),
    Sqrt,
}

impl FromStr for RankSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "sqrt" {
            Ok(RankSpec::Sqrt)
        } else {
            s.parse()
                .map(RankSpec::Fixed)
                .map_err(|_| format!("expected an integer or `sqrt`, got {s:?}"))
        }
    }
}

impl RankSpec {
    fn resolve(self, n: usize) -> usize {
        match self {
            RankSpec::Fixed(r) => r,
            RankSpec::Sqrt => ceil_sqrt(n),
        }
    }
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "coverage")]
    family: FamilyArg,
    /// Ground-set sizes.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Ranks; `sqrt` means ceil(sqrt(n)).
    #[arg(long, value_delimiter = ',')]
    r: Vec<RankSpec>,
    #[arg(long = "eps", value_delimiter = ',')]
    epsilons: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    seeds: Vec<u64>,
    #[arg(long, value_enum, value_delimiter = ',')]
    variants: Vec<VariantArg>,
    /// Largest n for which the exact optimum is computed.
    #[arg(long, default_value_t = 16)]
    brute_force_max: usize,
    #[arg(long)]
    out: PathBuf,
}

/// One CSV row. Column order is the field order.
#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub r: usize,
    pub epsilon: f64,
    pub variant: Variant,
    pub seed: u64,
    pub value: Option<f64>,
    pub opt_value: Option<f64>,
    pub ratio: Option<f64>,
    pub value_queries: Option<u64>,
    pub independence_queries: Option<u64>,
    pub iterations: Option<usize>,
    pub wall_time_ms: f64,
    pub failed: bool,
    pub normalized_queries: Option<f64>,
    pub error: Option<String>,
}

pub const COLUMNS: [&str; 16] = [
    "instance",
    "n",
    "r",
    "epsilon",
    "variant",
    "seed",
    "value",
    "opt_value",
    "ratio",
    "value_queries",
    "independence_queries",
    "iterations",
    "wall_time_ms",
    "failed",
    "normalized_queries",
    "error",
];

/// Total queries over the scale the variant's bound predicts.
pub fn normalized(variant: Variant, n: usize, r: usize, queries: u64) -> f64 {
    let scale = match variant {
        Variant::Deterministic => deterministic_query_scale(n, r),
        Variant::Randomized => randomized_query_scale(n, r),
    };
    queries as f64 / scale
}

fn run_cell(args: &BenchArgs, n: usize, r: usize, seed: u64, epsilon: f64, variant: Variant) -> BenchRow {
    let mut row = BenchRow {
        instance: format!("{}-n{n}-r{r}-s{seed}", Family::from(args.family).name()),
        n,
        r,
        epsilon,
        variant,
        seed,
        value: None,
        opt_value: None,
        ratio: None,
        value_queries: None,
        independence_queries: None,
        iterations: None,
        wall_time_ms: 0.0,
        failed: false,
        normalized_queries: None,
        error: None,
    };
    let started = Instant::now();
    let outcome = (|| -> anyhow::Result<(RunReport<f64>, Option<f64>)> {
        let file = generate(args.family.into(), n, r, seed, GenerateOptions::default())?;
        let instance = file.build::<f64>()?;
        let config = SolverConfig::new(epsilon, variant).with_seed(seed);
        let run = non_oblivious_solve(&instance.objective, &instance.matroid, &config)?;
        let opt = if n <= args.brute_force_max {
            Some(brute_force_opt(&instance.objective, &instance.matroid)?.opt_value)
        } else {
            None
        };
        Ok((run, opt))
    })();
    row.wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
    match outcome {
        Ok((run, opt)) => {
            row.value = Some(run.objective_value);
            row.opt_value = opt;
            row.ratio = opt.map(|o| if o == 0.0 { 1.0 } else { run.objective_value / o });
            row.value_queries = Some(run.queries.value_queries);
            row.independence_queries = Some(run.queries.independence_queries);
            row.iterations = Some(run.iterations);
            row.failed = run.failed;
            row.normalized_queries = Some(normalized(variant, n, r, run.queries.total()));
        }
        Err(err) => row.error = Some(format!("{err:#}")),
    }
    row
}

pub fn run(args: BenchArgs) -> anyhow::Result<ExitCode> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_path(&args.out)
        .with_context(|| format!("cannot write {}", args.out.display()))?;
    writer.write_record(COLUMNS)?;
    writer.flush()?;

    let mut rows = 0usize;
    let mut errors = 0usize;
    let mut summary: BTreeMap<(String, String), (f64, f64)> = BTreeMap::new();
    for &n in &args.n {
        for &spec in &args.r {
            let r = spec.resolve(n);
            for &seed in &args.seeds {
                for &epsilon in &args.epsilons {
                    for &variant in &args.variants {
                        let variant = Variant::from(variant);
                        let row = run_cell(&args, n, r, seed, epsilon, variant);
                        rows += 1;
                        if row.error.is_some() {
                            errors += 1;
                        }
                        if let Some(q) = row.normalized_queries {
                            let key = (format!("{variant:?}").to_lowercase(), format!("{epsilon}"));
                            let entry = summary.entry(key).or_insert((f64::INFINITY, 0.0));
                            entry.0 = entry.0.min(q);
                            entry.1 = entry.1.max(q);
                        }
                        writer.serialize(&row)?;
                        writer.flush()?;
                    }
                }
            }
        }
    }

    println!("rows: {rows}, errors: {errors}");
    for ((variant, epsilon), (lo, hi)) in &summary {
        println!(
            "{variant} eps={epsilon}: normalized queries max {hi:.4}, min {lo:.4}, spread {:.3}x",
            hi / lo
        );
    }
    Ok(if rows > 0 && errors == rows {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
