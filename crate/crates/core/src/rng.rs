//! Seeded randomness.
//!
//! All randomized solvers draw from [`RandomSource`], a ChaCha8 stream keyed by
//! a 64-bit seed. ChaCha8 is a counter-based generator whose output is fixed by
//! its specification, so a seed replays identically on every platform. Integer
//! draws go through `u64` ranges to stay independent of pointer width.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::set::{ElementId, ElementSet};

#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform integer in `[0, bound)`. Panics if `bound == 0`.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "empty range");
        self.rng.gen_range(0..bound as u64) as usize
    }

    /// Uniform `k`-subset of `pool`, drawn without replacement.
    pub fn sample_without_replacement(&mut self, pool: &ElementSet, k: usize) -> Result<ElementSet> {
        let members = pool.to_vec();
        let picked = self.sample_slice(&members, k)?;
        let mut out = ElementSet::empty(pool.universe_size());
        for u in picked {
            out.insert(u);
        }
        Ok(out)
    }

    /// Uniform `k`-subset of the slice, in draw order.
    pub fn sample_slice(&mut self, pool: &[ElementId], k: usize) -> Result<Vec<ElementId>> {
        if k > pool.len() {
            return Err(Error::SampleTooLarge {
                requested: k,
                available: pool.len(),
            });
        }
        // `index::sample` works in u32 for pools below 2^32, which keeps the
        // draw sequence identical on 32- and 64-bit targets.
        Ok(index::sample(&mut self.rng, pool.len(), k)
            .into_iter()
            .map(|i| pool[i])
            .collect())
    }
}
