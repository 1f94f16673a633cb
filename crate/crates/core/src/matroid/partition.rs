use super::Matroid;
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Partition matroid: the ground set is split into disjoint blocks and a set is
/// independent iff it takes at most `capacity[i]` elements from block `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMatroid {
    block_of: Vec<usize>,
    capacities: Vec<usize>,
}

impl PartitionMatroid {
    /// `blocks` must be disjoint and cover `[0, n)`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>, capacities: Vec<usize>) -> Result<Self> {
        if blocks.len() != capacities.len() {
            return Err(Error::InvalidInstance(format!(
                "{} blocks but {} capacities",
                blocks.len(),
                capacities.len()
            )));
        }
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &u in block {
                if u >= n {
                    return Err(Error::ElementOutOfRange {
                        element: u,
                        universe: n,
                    });
                }
                if block_of[u] != usize::MAX {
                    return Err(Error::InvalidInstance(format!(
                        "element {u} appears in more than one block"
                    )));
                }
                block_of[u] = b;
            }
        }
        if let Some(u) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidInstance(format!("element {u} belongs to no block")));
        }
        Ok(Self { block_of, capacities })
    }

    pub fn block_count(&self) -> usize {
        self.capacities.len()
    }

    /// Rank: the sum over blocks of `min(capacity, block size)`.
    pub fn rank(&self) -> usize {
        let mut sizes = vec![0usize; self.capacities.len()];
        for &b in &self.block_of {
            sizes[b] += 1;
        }
        sizes.iter().zip(&self.capacities).map(|(&s, &c)| s.min(c)).sum()
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        let mut used = vec![0usize; self.capacities.len()];
        for u in set.iter() {
            let b = self.block_of[u.index()];
            used[b] += 1;
            if used[b] > self.capacities[b] {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_blocks() {
        assert!(PartitionMatroid::new(3, vec![vec![0, 1], vec![1, 2]], vec![1, 1]).is_err());
        assert!(PartitionMatroid::new(3, vec![vec![0, 1]], vec![1]).is_err());
        assert!(PartitionMatroid::new(3, vec![vec![0, 1, 2]], vec![1, 2]).is_err());
        assert!(PartitionMatroid::new(3, vec![vec![0, 5], vec![1, 2]], vec![1, 1]).is_err());
    }

    #[test]
    fn rank_is_capped_sum() {
        let m = PartitionMatroid::new(5, vec![vec![0], vec![1, 2, 3, 4]], vec![3, 2]).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(crate::matroid::rank(&m), 3);
    }
}
