use super::*;
use crate::matroid::{LiftedMatroid, PartitionMatroid, UniformMatroid};
use crate::objective::fixtures::{cardinality, coverage4};
use crate::objective::{ModularFunction, ValueOracle};

fn set(n: usize, xs: &[usize]) -> ElementSet {
    ElementSet::of(n, xs)
}

struct NotAMatroid;

impl Matroid for NotAMatroid {
    fn ground_size(&self) -> usize {
        3
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        matches!(set.indices().as_slice(), [] | [0] | [1] | [0, 1] | [2])
    }
}

struct Squared(usize);

impl ValueOracle<f64> for Squared {
    fn ground_size(&self) -> usize {
        self.0
    }

    fn eval(&self, set: &ElementSet) -> f64 {
        (set.len() * set.len()) as f64
    }
}

#[test]
fn brute_force_on_coverage() {
    let f = coverage4();
    let best: BruteForceResult<f64> = brute_force_opt(&f, &UniformMatroid::new(4, 2)).unwrap();
    assert_eq!(best.opt_set, set(4, &[1, 3]));
    assert_eq!(best.opt_value, 5.0);
    // ∅, four singletons, six pairs.
    assert_eq!(best.enumerated_count, 11);
}

#[test]
fn brute_force_zero_objective() {
    let f = ModularFunction::new(vec![0.0; 5]);
    let best = brute_force_opt(&f, &UniformMatroid::new(5, 2)).unwrap();
    assert_eq!(best.opt_value, 0.0);
    assert!(best.opt_set.is_empty());
}

#[test]
fn brute_force_rejects_large_ground_set() {
    let f = cardinality(23);
    assert!(matches!(
        brute_force_opt(&f, &UniformMatroid::new(23, 1)),
        Err(Error::ScaleExceeded { .. })
    ));
}

#[test]
fn modular_optimum_is_greedy() {
    let f = ModularFunction::new(vec![2.0, 9.0, 4.0, 4.0, 1.0, 7.0]);
    let m = PartitionMatroid::new(6, vec![vec![0, 1, 4], vec![2, 3, 5]], vec![2, 1]).unwrap();
    let best = brute_force_opt(&f, &m).unwrap();
    let greedy = max_weight_independent(&m, f.weights());
    assert_eq!(best.opt_value, f.eval(&greedy));
}

#[test]
fn gap_is_zero_at_modular_optimum() {
    let f = ModularFunction::new(vec![5.0, 1.0, 3.0, 2.0]);
    let m = UniformMatroid::new(4, 2);
    let best = brute_force_opt(&f, &m).unwrap();
    let cert = localopt_gap(&f, &m, &best.opt_set, 0.0).unwrap();
    assert_eq!(cert.gap, 0.0);
    assert!(cert.passes(&NumericPolicy::exact()));
}

#[test]
fn gap_rejects_dependent_set() {
    let f = coverage4();
    let m = UniformMatroid::new(4, 2);
    let r: Result<LocalOptCertificate<f64>> = localopt_gap(&f, &m, &set(4, &[0, 1, 2]), 1.0);
    assert_eq!(r.unwrap_err(), Error::Dependent);
}

#[test]
fn greedy_gap_matches_enumeration() {
    let f = coverage4();
    let m = UniformMatroid::new(4, 2);
    for mask in 0..16u64 {
        let s = ElementSet::from_mask(4, mask);
        if s.len() > 2 {
            continue;
        }
        let cert: LocalOptCertificate<f64> = localopt_gap(&f, &m, &s, 0.0).unwrap();
        let brute: f64 = exhaustive_localopt_gap(&f, &m, &s).unwrap();
        assert_eq!(cert.gap, brute, "S = {s:?}");
    }
}

#[test]
fn axiom_report_examples() {
    let report = check_matroid_axioms(&UniformMatroid::new(6, 2)).unwrap();
    assert!(report.passed());
    assert_eq!(report.rank, 2);

    let lifted = LiftedMatroid::new(UniformMatroid::new(4, 2), 2).unwrap();
    let report = check_matroid_axioms(&lifted).unwrap();
    assert!(report.passed());
    assert_eq!(report.rank, 2);
}

#[test]
fn axiom_report_finds_exchange_violation() {
    let report = check_matroid_axioms(&NotAMatroid).unwrap();
    assert_eq!(
        report.violation,
        Some(AxiomViolation::Exchange {
            smaller: vec![2],
            larger: vec![0, 1]
        })
    );
}

#[test]
fn value_checks() {
    let mut rng = RandomSource::new(3);
    assert!(
        check_value_oracle::<f64, _>(&coverage4(), CheckMode::Exhaustive, &mut rng)
            .unwrap()
            .passed()
    );
    let report = check_value_oracle(&Squared(4), CheckMode::Exhaustive, &mut rng).unwrap();
    assert!(matches!(report.violation, Some(ValueViolation::NotSubmodular { .. })));
    let report = check_value_oracle(&Squared(30), CheckMode::sampled(), &mut rng).unwrap();
    assert!(matches!(report.violation, Some(ValueViolation::NotSubmodular { .. })));
    assert!(
        check_value_oracle::<f64, _>(&cardinality(40), CheckMode::sampled(), &mut rng)
            .unwrap()
            .passed()
    );
}

#[test]
fn approximation_targets() {
    let truth = BruteForceResult {
        opt_set: set(4, &[1, 3]),
        opt_value: 5.0,
        enumerated_count: 11,
    };
    let r = approximation_report(&set(4, &[0, 3]), &4.0, &truth, 0.1, 1).unwrap();
    assert!((r.target - 0.4).abs() < 1e-12);
    assert!((r.ratio - 0.8).abs() < 1e-12);
    assert!(r.passed);

    let r = approximation_report(&set(4, &[]), &0.0, &truth, 0.0, 1000).unwrap();
    assert!((r.target - (1.0 - (-1.0f64).exp())).abs() < 1e-3);
    assert!(!r.passed);

    let zero = BruteForceResult {
        opt_set: set(4, &[]),
        opt_value: 0.0,
        enumerated_count: 1,
    };
    let r = approximation_report(&set(4, &[]), &0.0, &zero, 0.5, 3).unwrap();
    assert_eq!(r.ratio, 1.0);
    assert!(r.passed);

    assert!(approximation_report(&set(5, &[]), &0.0, &zero, 0.5, 3).is_err());
}

#[test]
fn ceil_sqrt_values() {
    let got: Vec<usize> = [0, 1, 2, 4, 5, 9, 10, 100, 101].iter().map(|&n| ceil_sqrt(n)).collect();
    assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 4, 10, 11]);
}
