use super::Matroid;
use crate::set::ElementSet;

/// Cardinality constraint: a set is independent iff it has at most `k` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformMatroid {
    n: usize,
    k: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k }
    }

    pub fn capacity(&self) -> usize {
        self.k
    }
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        set.len() <= self.k
    }
}
