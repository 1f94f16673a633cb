use super::{check_universe, extend_unchecked, Matroid};
use crate::error::{Error, Result};
use crate::set::{ElementId, ElementSet};

/// Ground-set limit for [`exchange_bijection`]; it is a test utility.
pub const BIJECTION_MAX_N: usize = 20;

/// A bijection `h: A → B` between two bases with `(B − h(u)) + u` independent
/// for every `u ∈ A`, and `h(u) = u` on `A ∩ B`.
///
/// Computed by augmenting-path bipartite matching on the feasible-swap graph.
/// Pairs are returned in ascending order of their `A` element.
pub fn exchange_bijection<M: Matroid + ?Sized>(
    m: &M,
    a: &ElementSet,
    b: &ElementSet,
) -> Result<Vec<(ElementId, ElementId)>> {
    check_universe(m, a)?;
    check_universe(m, b)?;
    if m.ground_size() > BIJECTION_MAX_N {
        return Err(Error::ScaleExceeded {
            what: "exchange bijection ground set",
            limit: BIJECTION_MAX_N,
            found: m.ground_size(),
        });
    }
    for s in [a, b] {
        if !m.is_independent(s) {
            return Err(Error::Dependent);
        }
        if extend_unchecked(m, s.clone()) != *s {
            return Err(Error::ExchangePrecondition("argument is not a base"));
        }
    }

    let left: Vec<ElementId> = a.difference(b).to_vec();
    let right: Vec<ElementId> = b.difference(a).to_vec();
    let adjacency: Vec<Vec<usize>> = left
        .iter()
        .map(|&u| {
            right
                .iter()
                .enumerate()
                .filter(|&(_, &w)| m.is_independent(&b.without(w).with(u)))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    let mut match_right: Vec<Option<usize>> = vec![None; right.len()];
    for i in 0..left.len() {
        let mut visited = vec![false; right.len()];
        if !augment(i, &adjacency, &mut match_right, &mut visited) {
            return Err(Error::NoPerfectMatching);
        }
    }

    let mut pairs: Vec<(ElementId, ElementId)> = a.intersection(b).iter().map(|u| (u, u)).collect();
    for (j, owner) in match_right.iter().enumerate() {
        if let Some(i) = owner {
            pairs.push((left[*i], right[j]));
        }
    }
    pairs.sort();
    Ok(pairs)
}

fn augment(i: usize, adjacency: &[Vec<usize>], match_right: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &j in &adjacency[i] {
        if visited[j] {
            continue;
        }
        visited[j] = true;
        let free = match match_right[j] {
            None => true,
            Some(k) => augment(k, adjacency, match_right, visited),
        };
        if free {
            match_right[j] = Some(i);
            return true;
        }
    }
    false
}
