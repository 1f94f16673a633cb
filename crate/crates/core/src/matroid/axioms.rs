use std::fmt;

/// First matroid-axiom failure found by an exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    EmptySetDependent,
    NotDownClosed { set: Vec<usize>, subset: Vec<usize> },
    Exchange { smaller: Vec<usize>, larger: Vec<usize> },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::EmptySetDependent => write!(f, "the empty set is dependent"),
            AxiomViolation::NotDownClosed { set, subset } => {
                write!(f, "{set:?} is independent but its subset {subset:?} is not")
            }
            AxiomViolation::Exchange { smaller, larger } => {
                write!(f, "no element of {larger:?} extends {smaller:?} (exchange axiom)")
            }
        }
    }
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Exhaustively checks non-emptiness, down-closedness and the exchange axiom
/// for the independence predicate over all subsets of `[0, n)`, encoded as
/// bit masks. Returns the number of independent sets and the first violation.
///
/// The exchange axiom is checked only for `|T| = |S| + 1`, which implies the
/// general form once down-closedness holds.
pub fn check_family<F>(n: usize, independent: F) -> (usize, Option<AxiomViolation>)
where
    F: Fn(u64) -> bool,
{
    assert!(n < 64, "mask-based check needs n < 64");
    let total = 1u64 << n;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 0..total {
        if independent(mask) {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    let count = by_size.iter().map(Vec::len).sum();
    if by_size[0].is_empty() {
        return (count, Some(AxiomViolation::EmptySetDependent));
    }
    for level in &by_size {
        for &s in level {
            for i in 0..n {
                if s >> i & 1 == 1 && !independent(s & !(1 << i)) {
                    return (
                        count,
                        Some(AxiomViolation::NotDownClosed {
                            set: members(s),
                            subset: members(s & !(1 << i)),
                        }),
                    );
                }
            }
        }
    }
    for k in 0..n {
        for &s in &by_size[k] {
            let extendable = (0..n)
                .filter(|&i| s >> i & 1 == 0 && independent(s | 1 << i))
                .fold(0u64, |acc, i| acc | 1 << i);
            for &t in &by_size[k + 1] {
                if t & !s & extendable == 0 {
                    return (
                        count,
                        Some(AxiomViolation::Exchange {
                            smaller: members(s),
                            larger: members(t),
                        }),
                    );
                }
            }
        }
    }
    (count, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_passes() {
        let (count, v) = check_family(6, |m| m.count_ones() <= 2);
        assert_eq!(count, 1 + 6 + 15);
        assert_eq!(v, None);
    }

    #[test]
    fn exchange_failure_is_reported() {
        let family = [0b000u64, 0b001, 0b010, 0b011, 0b100];
        let (_, v) = check_family(3, |m| family.contains(&m));
        assert_eq!(
            v,
            Some(AxiomViolation::Exchange {
                smaller: vec![2],
                larger: vec![0, 1]
            })
        );
    }

    #[test]
    fn down_closure_failure_is_reported() {
        let family = [0b00u64, 0b11];
        let (_, v) = check_family(2, |m| family.contains(&m));
        assert!(matches!(v, Some(AxiomViolation::NotDownClosed { .. })));
    }

    #[test]
    fn empty_family_is_reported() {
        let (_, v) = check_family(2, |_| false);
        assert_eq!(v, Some(AxiomViolation::EmptySetDependent));
    }
}
