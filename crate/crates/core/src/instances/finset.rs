use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest finite set the bitmask instances handle.
pub const MAX_POINTS: usize = 64;

/// A finite set of distinct labels, kept in sorted order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSet(Arc<[String]>);

impl FinSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = labels.into_iter().map(Into::into).collect();
        v.sort();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidObject("duplicate label".into()));
        }
        if v.len() > MAX_POINTS {
            return Err(Error::InvalidObject(format!(
                "{} points exceeds the maximum of {MAX_POINTS}",
                v.len()
            )));
        }
        Ok(FinSet(v.into()))
    }

    /// `{0, 1, ..., n-1}` with decimal labels.
    pub fn range(n: usize) -> Self {
        FinSet::new((0..n).map(|i| i.to_string())).expect("distinct labels")
    }

    pub fn empty() -> Self {
        FinSet(Arc::from(Vec::<String>::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    /// Bitmask with every point set.
    pub fn full_mask(&self) -> u64 {
        mask_of_len(self.len())
    }

    /// The subset selected by `mask`, together with the indices (into `self`)
    /// of its points in order.
    pub fn subset(&self, mask: u64) -> (FinSet, Vec<usize>) {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let labels: Vec<String> = idx.iter().map(|&i| self.0[i].clone()).collect();
        (FinSet(labels.into()), idx)
    }

    /// Bitmask of the points of `sub` inside `self`, if `sub ⊆ self`.
    pub fn mask_of(&self, sub: &FinSet) -> Option<u64> {
        sub.labels()
            .iter()
            .try_fold(0u64, |acc, l| self.index_of(l).map(|i| acc | 1 << i))
    }
}

pub(crate) fn mask_of_len(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
