//! Sorted, duplicate-free subsets of the coordinate index set `{1, .., n}`.

use std::fmt;

use crate::{Error, Result};

/// A subset of coordinate indices, stored sorted and 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct IndexSet {
    indices: Vec<usize>,
}

impl IndexSet {
    /// Builds a set from arbitrary indices, sorting and deduplicating.
    /// Every index must lie in `1..=n`.
    pub fn new(indices: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidInstance(format!(
                "index {bad} outside 1..={n}"
            )));
        }
        Ok(IndexSet { indices: v })
    }

    /// Unchecked variant for indices already known to be valid.
    pub fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        IndexSet { indices }
    }

    pub fn empty() -> Self {
        IndexSet::default()
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet { indices: vec![i] }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.indices.iter().all(|i| !other.contains(*i))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_and_dedups() {
        let s = IndexSet::new([3, 1, 3, 2], 4).unwrap();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(IndexSet::new([0], 4).is_err());
        assert!(IndexSet::new([5], 4).is_err());
    }

    #[test]
    fn disjointness() {
        let a = IndexSet::new([1, 3], 4).unwrap();
        let b = IndexSet::new([2, 4], 4).unwrap();
        let c = IndexSet::new([3], 4).unwrap();
        assert!(a.is_disjoint(&b));
        assert!(!a.is_disjoint(&c));
    }
}
