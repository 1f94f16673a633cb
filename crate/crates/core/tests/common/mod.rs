//! Small brute-forceable instances shared by the integration tests.
#![allow(dead_code)]

use nolsearch::format::{
    generate, ConcaveSpec, Family, GenerateOptions, InstanceFile, MatroidSpec, ObjectiveSpec, RegularizerSpec,
};
use nolsearch::RandomSource;

/// Four elements over points `a..e`: `{a,b}`, `{b,c}`, `{d}`, `{a,d,e}`,
/// unit weights, at most two elements.
pub fn coverage4() -> InstanceFile {
    let names = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    InstanceFile {
        format_version: 1,
        name: "coverage4".into(),
        n: 4,
        expected_rank: Some(2),
        objective: ObjectiveSpec::Coverage {
            universe: names(&["a", "b", "c", "d", "e"]),
            weights: vec![1; 5],
            covers: vec![
                names(&["a", "b"]),
                names(&["b", "c"]),
                names(&["d"]),
                names(&["a", "d", "e"]),
            ],
        },
        matroid: MatroidSpec::Uniform { k: 2 },
        regularizer: None,
    }
}

fn generated(family: Family, n: usize, r: usize, seed: u64) -> InstanceFile {
    generate(family, n, r, seed, GenerateOptions::default()).unwrap()
}

fn random_weights(n: usize, seed: u64, max: usize) -> Vec<u64> {
    let mut rng = RandomSource::new(seed);
    (0..n).map(|_| rng.below(max + 1) as u64).collect()
}

fn with_objective(mut file: InstanceFile, name: &str, objective: ObjectiveSpec) -> InstanceFile {
    file.name = name.to_string();
    file.objective = objective;
    file
}

/// 33 instances with `n ≤ 14` and `r ≤ 4`: coverage objectives under
/// uniform, partition and graphic matroids, modular and capped-sum objectives
/// under the same matroids, and the hand-written four-element instance.
pub fn suite() -> Vec<InstanceFile> {
    let mut out = vec![coverage4()];
    let shapes: [(usize, usize); 8] = [(8, 2), (10, 3), (12, 3), (14, 4), (9, 4), (11, 2), (13, 3), (14, 3)];
    for (i, &(n, r)) in shapes.iter().enumerate() {
        out.push(generated(Family::Coverage, n, r, 100 + i as u64));
        out.push(generated(Family::Partition, n, r, 200 + i as u64));
        out.push(generated(Family::Graphic, n, r, 300 + i as u64));
    }
    for (i, &(n, r)) in shapes.iter().take(6).enumerate() {
        let family = [Family::Coverage, Family::Partition, Family::Graphic][i % 3];
        let base = generated(family, n, r, 400 + i as u64);
        let weights = random_weights(n, 500 + i as u64, 9);
        out.push(with_objective(
            base,
            &format!("modular-{}-n{n}-r{r}", family.name()),
            ObjectiveSpec::Modular { weights },
        ));
    }
    for (i, &(n, r)) in shapes.iter().skip(6).enumerate() {
        let base = generated(Family::Partition, n, r, 600 + i as u64);
        let weights = random_weights(n, 700 + i as u64, 6);
        out.push(with_objective(
            base,
            &format!("capped-partition-n{n}-r{r}"),
            ObjectiveSpec::ConcaveOfModular {
                weights,
                map: ConcaveSpec::Cap { cap: 12 },
            },
        ));
    }
    out
}

/// Suite members with at most `max_n` elements.
pub fn small(max_n: usize) -> Vec<InstanceFile> {
    suite().into_iter().filter(|f| f.n <= max_n).collect()
}

/// Coverage instances with a non-negative regularizer.
pub fn regularized_suite() -> Vec<InstanceFile> {
    let mut out = Vec::new();
    let mut first = coverage4();
    first.name = "coverage4-reg".into();
    first.regularizer = Some(RegularizerSpec {
        weights: vec![1, 0, 0, 2],
    });
    out.push(first);
    let shapes: [(usize, usize); 10] = [
        (6, 2),
        (7, 3),
        (8, 2),
        (8, 3),
        (9, 3),
        (10, 2),
        (10, 3),
        (11, 3),
        (12, 2),
        (12, 4),
    ];
    for (i, &(n, r)) in shapes.iter().enumerate() {
        let family = [Family::Coverage, Family::Partition, Family::Graphic][i % 3];
        let mut file = generated(family, n, r, 800 + i as u64);
        file.name = format!("{}-reg", file.name);
        let weights = random_weights(n, 900 + i as u64, 4)
            .into_iter()
            .map(|w| w as i64)
            .collect();
        file.regularizer = Some(RegularizerSpec { weights });
        out.push(file);
    }
    out
}
