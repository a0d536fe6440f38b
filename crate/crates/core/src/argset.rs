use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of arguments, addressed by their dense index in a [`Framework`](crate::Framework).
///
/// Sets built for the same framework share a capacity. Ordering is lexicographic over the
/// ascending member list, so `{0} < {0,1} < {1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgSet(FixedBitSet);

impl ArgSet {
    pub fn empty(capacity: usize) -> Self {
        ArgSet(FixedBitSet::with_capacity(capacity))
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        ArgSet(bits)
    }

    pub fn from_indices(capacity: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(capacity);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, i: usize) -> bool {
        !self.0.put(i)
    }

    pub fn remove(&mut self, i: usize) {
        self.0.set(i, false);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_superset(&self, other: &ArgSet) -> bool {
        self.0.is_superset(&other.0)
    }

    pub fn is_strict_subset(&self, other: &ArgSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &ArgSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union_with(&mut self, other: &ArgSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &ArgSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &ArgSet) {
        self.0.difference_with(&other.0);
    }

    pub fn union(&self, other: &ArgSet) -> ArgSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &ArgSet) -> ArgSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &ArgSet) -> ArgSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }
}

impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_lexicographic_over_members() {
        let a = ArgSet::from_indices(3, [0]);
        let ab = ArgSet::from_indices(3, [0, 1]);
        let b = ArgSet::from_indices(3, [1]);
        let empty = ArgSet::empty(3);
        assert!(empty < a && a < ab && ab < b);
    }

    #[test]
    fn insert_reports_novelty() {
        let mut s = ArgSet::empty(4);
        assert!(s.insert(2));
        assert!(!s.insert(2));
        assert_eq!(s.len(), 1);
        assert!(ArgSet::full(4).is_superset(&s));
    }
}
