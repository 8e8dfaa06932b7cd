use std::fmt;

use serde::{Deserialize, Serialize};

/// Sorted, duplicate-free set of hidden-state indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct StateSet {
    members: Vec<usize>,
}

impl StateSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Members must already be strictly increasing.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.members.binary_search(&c).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub fn intersection_len(&self, other: &StateSet) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn union_len(&self, other: &StateSet) -> usize {
        self.len() + other.len() - self.intersection_len(other)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.intersection_len(other) == self.len()
    }

    /// Indicator vector of length `dims`.
    pub fn to_bits(&self, dims: usize) -> Vec<u8> {
        let mut bits = vec![0u8; dims];
        for c in self.iter().filter(|&c| c < dims) {
            bits[c] = 1;
        }
        bits
    }
}

impl FromIterator<usize> for StateSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }
}

impl From<Vec<usize>> for StateSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl From<StateSet> for Vec<usize> {
    fn from(set: StateSet) -> Self {
        set.members
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}
