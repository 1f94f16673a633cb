//! Ground-set elements and fixed-universe bit sets.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of an element of the ground set `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of a ground set of fixed size, stored as a bit vector.
///
/// Two sets compare equal iff they have the same universe and the same members.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(universe_size: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe_size),
        }
    }

    pub fn full(universe_size: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe_size);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from raw indices, rejecting anything outside the universe.
    pub fn from_indices<I>(universe_size: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe_size);
        for i in indices {
            if i >= universe_size {
                return Err(Error::ElementOutOfRange {
                    element: i,
                    universe: universe_size,
                });
            }
            set.bits.insert(i);
        }
        Ok(set)
    }

    /// Same as [`from_indices`](Self::from_indices) but panics on out-of-range
    /// indices. Meant for fixtures and internal construction.
    pub fn of(universe_size: usize, indices: &[usize]) -> Self {
        Self::from_indices(universe_size, indices.iter().copied()).expect("index in universe")
    }

    pub fn from_mask(universe_size: usize, mask: u64) -> Self {
        debug_assert!(universe_size <= 64);
        let mut set = Self::empty(universe_size);
        for i in 0..universe_size {
            if mask >> i & 1 == 1 {
                set.bits.insert(i);
            }
        }
        set
    }

    pub fn universe_size(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    #[inline]
    pub fn contains(&self, u: ElementId) -> bool {
        self.bits.contains(u.0)
    }

    /// Inserts `u`; returns whether it was absent.
    #[inline]
    pub fn insert(&mut self, u: ElementId) -> bool {
        assert!(u.0 < self.bits.len(), "element {u} outside universe");
        !self.bits.put(u.0)
    }

    /// Removes `u`; returns whether it was present.
    #[inline]
    pub fn remove(&mut self, u: ElementId) -> bool {
        let present = self.contains(u);
        if present {
            self.bits.set(u.0, false);
        }
        present
    }

    /// `S + u`
    pub fn with(&self, u: ElementId) -> Self {
        let mut s = self.clone();
        s.insert(u);
        s
    }

    /// `S - u`
    pub fn without(&self, u: ElementId) -> Self {
        let mut s = self.clone();
        s.remove(u);
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.bits.ones().map(ElementId)
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut s = self.clone();
        s.bits.union_with(&other.bits);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut s = self.clone();
        s.bits.difference_with(&other.bits);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut s = self.clone();
        s.bits.intersect_with(&other.bits);
        s
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_universe(other);
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        s.bits.toggle_range(..);
        s
    }

    pub fn clear(&mut self) {
        self.bits.clear();
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.bits.len(),
            other.bits.len(),
            "set operation across different universes"
        );
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = ElementId;
    type IntoIter = std::iter::Map<fixedbitset::Ones<'a>, fn(usize) -> ElementId>;

    fn into_iter(self) -> Self::IntoIter {
        self.bits.ones().map(ElementId as fn(usize) -> ElementId)
    }
}
