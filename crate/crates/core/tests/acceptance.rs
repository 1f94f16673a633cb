//! Acceptance criteria. Runs without the libtest harness so that each
//! criterion prints exactly one PASS/FAIL line; exits non-zero on any FAIL.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use nolsearch::format::{InstanceFile, ReportFile};
use nolsearch::ledger::{with_counting, QueryLedger};
use nolsearch::matroid::{min_weight_exchange, rank, LiftedMatroid};
use nolsearch::objective::{g_eval, AlphaSchedule, GPrime, ValueOracle};
use nolsearch::solver::{
    det_local_search, idealized_local_search, rand_local_search, rand_local_search_once, warm_start,
};
use nolsearch::verify::{
    brute_force_opt, ceil_sqrt, check_matroid_axioms, check_value_oracle, deterministic_query_scale,
    exhaustive_localopt_gap, independent_sets, lifted_guarantee, localopt_gap, randomized_query_scale, CheckMode,
};
use nolsearch::{
    non_oblivious_solve, regularized_solve, ElementId, ElementSet, Exact, Matroid, NumericPolicy, RandomSource,
    RunReport, SolverConfig, Variant, WarmStart,
};

const EPSILONS: [f64; 3] = [0.5, 0.25, 0.2];

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

/// Runs one criterion and folds the time limit into its verdict.
fn timed(limit: Option<Duration>, body: impl FnOnce() -> Verdict) -> (Verdict, Duration) {
    let started = Instant::now();
    let mut v = body();
    let elapsed = started.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            v.passed = false;
            v.detail = format!("{}; took {elapsed:.1?}, limit {limit:?}", v.detail);
        }
    }
    (v, elapsed)
}

fn opt_and_empty(file: &InstanceFile) -> (f64, f64) {
    let inst = file.build::<f64>().unwrap();
    let opt = brute_force_opt(&inst.objective, &inst.matroid).unwrap().opt_value;
    let empty = inst.objective.eval(&ElementSet::empty(inst.n()));
    (opt, empty)
}

fn approximation_deterministic() -> Verdict {
    let suite = common::suite();
    let (mut runs, mut failures) = (0, Vec::new());
    for file in &suite {
        let inst = file.build::<f64>().unwrap();
        let (opt, empty) = opt_and_empty(file);
        for eps in EPSILONS {
            let config = SolverConfig::new(eps, Variant::Deterministic);
            let run: RunReport<f64> = non_oblivious_solve(&inst.objective, &inst.matroid, &config).unwrap();
            let bound = lifted_guarantee(run.levels, eps, opt, empty);
            runs += 1;
            if run.objective_value < bound {
                failures.push(format!("{} eps={eps}: {} < {bound}", file.name, run.objective_value));
            }
        }
    }
    verdict(
        failures.is_empty() && suite.len() >= 30,
        format!(
            "{} instances, {runs} runs, {} below the bound {:?}",
            suite.len(),
            failures.len(),
            failures
        ),
    )
}

fn classic_local_search() -> Verdict {
    let suite = common::suite();
    let (mut runs, mut failures) = (0, Vec::new());
    for file in &suite {
        let inst = file.build::<f64>().unwrap();
        let (opt, _) = opt_and_empty(file);
        for eps in EPSILONS {
            let config = SolverConfig::new(eps, Variant::Deterministic).with_levels(1);
            let run: RunReport<f64> = non_oblivious_solve(&inst.objective, &inst.matroid, &config).unwrap();
            runs += 1;
            if run.objective_value < (0.5 - eps) * opt {
                failures.push(format!("{} eps={eps}", file.name));
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!("{runs} runs with one level, failures {failures:?}"),
    )
}

fn warm_start_third() -> Verdict {
    let mut failures = Vec::new();
    let suite = common::suite();
    for file in &suite {
        let inst = file.build::<f64>().unwrap();
        let (opt, _) = opt_and_empty(file);
        for kind in [WarmStart::ThresholdGreedy, WarmStart::PlainGreedy] {
            let s = warm_start(&inst.objective, &inst.matroid, kind);
            let value: f64 = inst.objective.eval(&s);
            if !inst.matroid.is_independent(&s) || 3.0 * value < opt {
                failures.push(format!("{} {kind:?}: {value} vs OPT {opt}", file.name));
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!("{} instances, both warm starts, failures {failures:?}", suite.len()),
    )
}

fn certification() -> Verdict {
    let files = common::small(10);
    let mut checked = 0;
    let mut failures = Vec::new();
    for file in &files {
        let inst = file.build::<Exact>().unwrap();
        let (f, m) = (&inst.objective, &inst.matroid);
        for eps in EPSILONS {
            let e = Exact::from_float(eps).unwrap();
            let det = det_local_search(f, m, eps, WarmStart::ThresholdGreedy, None).unwrap();
            let mut rng = RandomSource::new(11);
            let rand = rand_local_search(f, m, eps, WarmStart::ThresholdGreedy, None, &mut rng).unwrap();
            for (label, outcome) in [("det", det), ("rand", rand)] {
                let Some(s) = outcome.set else { continue };
                let bound = e.clone() * outcome.warm_start_value.clone();
                let cert = localopt_gap(f, m, &s, bound).unwrap();
                let brute = exhaustive_localopt_gap(f, m, &s).unwrap();
                checked += 1;
                if !cert.passes(&NumericPolicy::exact()) || cert.gap != brute {
                    failures.push(format!("{} {label} eps={eps}", file.name));
                }
            }
        }
        // The end-to-end solver on the lifted ground set, with two levels so
        // that the lifted family stays enumerable.
        for variant in [Variant::Deterministic, Variant::Randomized] {
            let config = SolverConfig::new(0.25, variant).with_levels(2).with_seed(5);
            let run: RunReport<Exact> = non_oblivious_solve(f, m, &config).unwrap();
            let Some(cert) = run.certificate else { continue };
            let guide = GPrime::new(f, AlphaSchedule::<Exact>::new(2).unwrap()).unwrap();
            let lifted = LiftedMatroid::new(m, 2).unwrap();
            let brute = exhaustive_localopt_gap(&guide, &lifted, &run.lifted_set).unwrap();
            checked += 1;
            if !cert.passes(&NumericPolicy::exact()) || cert.gap != brute {
                failures.push(format!("{} lifted {variant:?}", file.name));
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{} instances with n <= 10, {checked} certificates, greedy gap = exhaustive gap; failures {failures:?}",
            files.len()
        ),
    )
}

fn exchange_equivalence() -> Verdict {
    let mut rng = RandomSource::new(2024);
    let families = [
        nolsearch::format::Family::Coverage,
        nolsearch::format::Family::Partition,
        nolsearch::format::Family::Graphic,
    ];
    let (mut mismatches, mut over_budget, mut cases) = (0, 0, 0);
    while cases < 1000 {
        let n = 6 + rng.below(9);
        let r = 2 + rng.below(4);
        let family = families[rng.below(3)];
        let seed = rng.below(1 << 30) as u64;
        let inst = nolsearch::format::generate(family, n, r, seed, Default::default())
            .unwrap()
            .build::<f64>()
            .unwrap();
        let m = &inst.matroid;
        // Random base: greedy over a random order.
        let order = rng.sample_slice(&(0..n).map(ElementId).collect::<Vec<_>>(), n).unwrap();
        let mut s = ElementSet::empty(n);
        for u in order {
            if m.is_independent(&s.with(u)) {
                s.insert(u);
            }
        }
        let outside: Vec<ElementId> = s
            .complement()
            .iter()
            .filter(|&v| m.is_independent(&ElementSet::empty(n).with(v)))
            .collect();
        if outside.is_empty() {
            continue;
        }
        let v = outside[rng.below(outside.len())];
        let k = 1 + rng.below(s.len());
        let mut sub = rng.sample_without_replacement(&s, k).unwrap();
        if !m.is_independent(&s.difference(&sub).with(v)) {
            sub = s.clone();
        }
        let candidates: Vec<(ElementId, f64)> = sub.iter().map(|u| (u, rng.below(6) as f64)).collect();
        let ledger = QueryLedger::new();
        let counted = with_counting(m, &ledger);
        let u = min_weight_exchange(&counted, &s, &candidates, v).unwrap();
        let weight = |x: ElementId| candidates.iter().find(|(y, _)| *y == x).unwrap().1;
        let scan = candidates
            .iter()
            .filter(|(x, _)| m.is_independent(&s.without(*x).with(v)))
            .map(|(_, w)| *w)
            .fold(f64::INFINITY, f64::min);
        let feasible = m.is_independent(&s.without(u).with(v));
        if !feasible || weight(u) != scan {
            mismatches += 1;
        }
        let budget = (candidates.len() as f64).log2().ceil() as u64 + 2;
        if ledger.independence_queries() > budget {
            over_budget += 1;
        }
        cases += 1;
    }
    verdict(
        mismatches == 0 && over_budget == 0,
        format!(
            "{cases} random cases, {mismatches} disagree with the linear scan, {over_budget} over the query budget"
        ),
    )
}

fn randomized_failure_rate() -> Verdict {
    let inst = nolsearch::format::generate(nolsearch::format::Family::Coverage, 12, 3, 42, Default::default())
        .unwrap()
        .build::<f64>()
        .unwrap();
    let mut failures = 0;
    for seed in 0..300 {
        let mut rng = RandomSource::new(seed);
        let out = rand_local_search_once(
            &inst.objective,
            &inst.matroid,
            0.5,
            WarmStart::ThresholdGreedy,
            &mut rng,
        )
        .unwrap();
        if out.set.is_none() {
            failures += 1;
        }
    }
    let rate = failures as f64 / 300.0;
    verdict(
        rate <= 0.45,
        format!("{failures}/300 runs failed (rate {rate:.3}, limit 0.45)"),
    )
}

fn query_scaling() -> Verdict {
    let mut det = Vec::new();
    let mut rnd = Vec::new();
    for n in [64usize, 128, 256, 512] {
        let r = ceil_sqrt(n);
        let inst = nolsearch::format::generate(nolsearch::format::Family::Coverage, n, r, 1, Default::default())
            .unwrap()
            .build::<f64>()
            .unwrap();
        for variant in [Variant::Deterministic, Variant::Randomized] {
            let config = SolverConfig::new(0.5, variant).with_seed(1);
            let run: RunReport<f64> = non_oblivious_solve(&inst.objective, &inst.matroid, &config).unwrap();
            let q = run.queries.total() as f64;
            match variant {
                Variant::Deterministic => det.push(q / deterministic_query_scale(n, r)),
                Variant::Randomized => rnd.push(q / randomized_query_scale(n, r)),
            }
        }
    }
    let spread = |xs: &[f64]| {
        xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max) / xs.iter().cloned().fold(f64::INFINITY, f64::min)
    };
    let (sd, sr) = (spread(&det), spread(&rnd));
    verdict(
        sd < 4.0 && sr < 4.0,
        format!(
            "deterministic normalized {:?} (spread {sd:.2}x), randomized normalized {:?} (spread {sr:.2}x)",
            det.iter().map(|x| format!("{x:.2}")).collect::<Vec<_>>(),
            rnd.iter().map(|x| format!("{x:.2}")).collect::<Vec<_>>()
        ),
    )
}

fn lifted_structure() -> Verdict {
    let mut cases: Vec<(InstanceFile, Vec<usize>)> = vec![(common::coverage4(), vec![1, 2, 3, 4])];
    let generate = |family, n, r, seed| nolsearch::format::generate(family, n, r, seed, Default::default()).unwrap();
    use nolsearch::format::Family::*;
    cases.push((generate(Graphic, 5, 2, 3), vec![1, 2, 3]));
    cases.push((generate(Partition, 6, 3, 4), vec![1, 2]));
    cases.push((generate(Coverage, 8, 3, 5), vec![1, 2]));
    cases.push((generate(Graphic, 8, 4, 6), vec![1, 2]));
    cases.push((generate(Coverage, 16, 3, 7), vec![1]));
    let mut rng = RandomSource::new(8);
    let mut failures = Vec::new();
    let mut checked = 0;
    for (file, levels) in &cases {
        let inst = file.build::<f64>().unwrap();
        let base_rank = rank(&inst.matroid);
        for &l in levels {
            let g = GPrime::new(&inst.objective, AlphaSchedule::<f64>::new(l).unwrap()).unwrap();
            let value = check_value_oracle(&g, CheckMode::Exhaustive, &mut rng).unwrap();
            let lifted = LiftedMatroid::new(&inst.matroid, l).unwrap();
            let axioms = check_matroid_axioms(&lifted).unwrap();
            checked += 1;
            if !value.passed() || !axioms.passed() || axioms.rank != base_rank {
                failures.push(format!(
                    "{} l={l}: {:?} {:?}",
                    file.name, value.violation, axioms.violation
                ));
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!("{checked} (instance, levels) pairs with n*l <= 16; failures {failures:?}"),
    )
}

fn rational_decay(levels: usize) -> Exact {
    let l = BigInt::from(levels);
    let ratio = Exact::new(l.clone(), l + 1);
    (0..levels).fold(Exact::one(), |acc, _| acc * ratio.clone())
}

/// Whether some move of the idealized search strictly increases `g`.
fn improving_move_exists<F: ValueOracle<Exact>, M: Matroid>(f: &F, m: &M, parts: &[ElementSet]) -> bool {
    let levels = parts.len();
    let alpha = AlphaSchedule::<Exact>::new(levels).unwrap();
    let current = g_eval(f, &alpha, parts).unwrap();
    let n = m.ground_size();
    let union = parts.iter().fold(ElementSet::empty(n), |a, p| a.union(p));
    for k in 0..levels {
        for u in parts[k].iter() {
            for j in 0..levels {
                let mut next = parts.to_vec();
                next[k].remove(u);
                if j != k {
                    let mut moved = next.clone();
                    moved[j].insert(u);
                    if g_eval(f, &alpha, &moved).unwrap() > current {
                        return true;
                    }
                }
                for v in (0..n).map(ElementId).filter(|v| !union.contains(*v)) {
                    if m.is_independent(&union.without(u).with(v)) {
                        let mut swapped = next.clone();
                        swapped[j].insert(v);
                        if g_eval(f, &alpha, &swapped).unwrap() > current {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

fn idealized_reference() -> Verdict {
    let files = common::small(10);
    let mut failures = Vec::new();
    let mut runs = 0;
    for file in &files {
        let inst = file.build::<Exact>().unwrap();
        let (f, m) = (&inst.objective, &inst.matroid);
        let truth = brute_force_opt(f, m).unwrap();
        let empty: Exact = f.eval(&ElementSet::empty(m.ground_size()));
        for levels in 1..=3 {
            let parts = idealized_local_search(f, m, levels).unwrap();
            let union = parts.iter().fold(ElementSet::empty(m.ground_size()), |a, p| a.union(p));
            let value: Exact = f.eval(&union);
            let d = rational_decay(levels);
            let bound = (Exact::one() - d.clone()) * truth.opt_value.clone() + d * empty.clone();
            runs += 1;
            let disjoint = (0..levels).all(|i| (i + 1..levels).all(|j| parts[i].is_disjoint(&parts[j])));
            if !disjoint || !m.is_independent(&union) || improving_move_exists(f, m, &parts) || value < bound {
                failures.push(format!("{} l={levels}", file.name));
            }
        }
    }
    verdict(
        failures.is_empty() && runs > 0,
        format!(
            "{runs} runs on {} instances with n <= 10, exact arithmetic; failures {failures:?}",
            files.len()
        ),
    )
}

fn regularized() -> Verdict {
    let files = common::regularized_suite();
    let factor = 1.0 - (-1.0f64).exp() - 0.25;
    let mut failures = Vec::new();
    let mut pairs = 0;
    for file in &files {
        let inst = file.build::<f64>().unwrap();
        let reg = inst.regularizer.as_ref().unwrap();
        let config = SolverConfig::new(0.25, Variant::Deterministic);
        let run = regularized_solve(&inst.objective, reg, &inst.matroid, &config).unwrap();
        let lhs = run.objective_value + reg.value(&run.output_set);
        for t in independent_sets(&inst.matroid).unwrap() {
            pairs += 1;
            let f_t: f64 = inst.objective.eval(&t);
            if lhs < factor * f_t + reg.value(&t) {
                failures.push(format!("{} T={:?}", file.name, t.indices()));
                break;
            }
        }
    }
    verdict(
        failures.is_empty() && files.len() >= 10,
        format!(
            "{} instances, {pairs} (S, T) comparisons; failures {failures:?}",
            files.len()
        ),
    )
}

fn determinism() -> Verdict {
    let mut files = common::small(12);
    files.truncate(8);
    let mut compared = 0;
    let mut differing = Vec::new();
    for file in &files {
        let inst = file.build::<f64>().unwrap();
        for variant in [Variant::Deterministic, Variant::Randomized] {
            let render = || {
                let config = SolverConfig::new(0.25, variant).with_seed(77);
                let run: RunReport<f64> = non_oblivious_solve(&inst.objective, &inst.matroid, &config).unwrap();
                ReportFile::from_run(&inst.name, rank(&inst.matroid), "f64", config.warm_start, &run)
                    .unwrap()
                    .to_json()
            };
            compared += 1;
            if render() != render() {
                differing.push(format!("{} {variant:?}", file.name));
            }
        }
    }
    verdict(
        differing.is_empty(),
        format!("{compared} report pairs compared byte for byte; differing {differing:?}"),
    )
}

/// Name, time limit and check.
type Criterion = (&'static str, Option<Duration>, fn() -> Verdict);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "approximation bound, deterministic",
            Some(Duration::from_secs(60)),
            approximation_deterministic,
        ),
        (
            "classic local search with one level",
            Some(Duration::from_secs(10)),
            classic_local_search,
        ),
        ("warm start reaches a third of OPT", None, warm_start_third),
        ("local-optimality certificates", None, certification),
        (
            "binary-search exchange vs linear scan",
            Some(Duration::from_secs(10)),
            exchange_equivalence,
        ),
        (
            "randomized failure rate",
            Some(Duration::from_secs(60)),
            randomized_failure_rate,
        ),
        ("query scaling", Some(Duration::from_secs(300)), query_scaling),
        ("lifted function and lifted matroid", None, lifted_structure),
        ("idealized reference search", None, idealized_reference),
        ("regularized solver", Some(Duration::from_secs(60)), regularized),
        ("determinism", None, determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, body)) in criteria.into_iter().enumerate() {
        let (v, elapsed) = timed(limit, body);
        if !v.passed {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{}] {name}: {} ({elapsed:.2?})",
            i + 1,
            if v.passed { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
