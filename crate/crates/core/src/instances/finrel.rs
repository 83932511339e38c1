//! Finite sets and binary relations.

use crate::category::{DaggerKernelCategory, Enumerable};
use crate::error::{Error, Result};
use crate::instances::finset::FinSet;

/// A relation `R ⊆ src × tgt`. Row `x` is the bitmask of `R(x) ⊆ tgt`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    src: FinSet,
    tgt: FinSet,
    rows: Vec<u64>,
}

impl Relation {
    pub fn from_rows(src: FinSet, tgt: FinSet, rows: Vec<u64>) -> Result<Self> {
        if rows.len() != src.len() {
            return Err(Error::InvalidPayload(format!(
                "{} rows for a source of size {}",
                rows.len(),
                src.len()
            )));
        }
        let full = tgt.full_mask();
        if rows.iter().any(|r| r & !full != 0) {
            return Err(Error::InvalidPayload("row refers to a missing target point".into()));
        }
        Ok(Relation { src, tgt, rows })
    }

    /// Builds a relation from index pairs `(x, y)`.
    pub fn from_pairs(src: FinSet, tgt: FinSet, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![0u64; src.len()];
        for &(x, y) in pairs {
            if x >= src.len() || y >= tgt.len() {
                return Err(Error::InvalidPayload(format!("pair ({x}, {y}) out of range")));
            }
            rows[x] |= 1 << y;
        }
        Ok(Relation { src, tgt, rows })
    }

    /// Builds a relation from label pairs.
    pub fn from_label_pairs(src: FinSet, tgt: FinSet, pairs: &[(&str, &str)]) -> Result<Self> {
        let idx: Result<Vec<(usize, usize)>> = pairs
            .iter()
            .map(|(a, b)| match (src.index_of(a), tgt.index_of(b)) {
                (Some(x), Some(y)) => Ok((x, y)),
                _ => Err(Error::InvalidPayload(format!("unknown label in ({a}, {b})"))),
            })
            .collect();
        Relation::from_pairs(src, tgt, &idx?)
    }

    /// The inclusion of the subset `mask` of `x`, as a relation `S -> X`.
    pub fn inclusion(x: &FinSet, mask: u64) -> Self {
        let (sub, idx) = x.subset(mask);
        let rows = idx.iter().map(|&i| 1u64 << i).collect();
        Relation {
            src: sub,
            tgt: x.clone(),
            rows,
        }
    }

    pub fn src(&self) -> &FinSet {
        &self.src
    }

    pub fn tgt(&self) -> &FinSet {
        &self.tgt
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, &r) in self.rows.iter().enumerate() {
            for y in 0..self.tgt.len() {
                if r >> y & 1 == 1 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Bitmask of `{y | ∃x. R(x, y)}`.
    pub fn range_mask(&self) -> u64 {
        self.rows.iter().fold(0, |a, r| a | r)
    }

    /// Bitmask of `{x | R(x) ≠ ∅}`.
    pub fn domain_mask(&self) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |a, (x, &r)| if r != 0 { a | 1 << x } else { a })
    }

    /// `R ⊆ S` for parallel relations.
    pub fn is_subrelation_of(&self, other: &Relation) -> bool {
        self.src == other.src
            && self.tgt == other.tgt
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(x, y)| format!("({},{})", self.src.labels()[x], self.tgt.labels()[y]))
            .collect();
        write!(f, "{:?}->{:?} {{{}}}", self.src, self.tgt, pairs.join(","))
    }
}

/// The category of finite sets and relations.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinRel;

impl DaggerKernelCategory for FinRel {
    type Object = FinSet;
    type Morphism = Relation;

    fn name(&self) -> &'static str {
        "finrel"
    }

    fn source(&self, f: &Relation) -> FinSet {
        f.src.clone()
    }

    fn target(&self, f: &Relation) -> FinSet {
        f.tgt.clone()
    }

    fn identity(&self, x: &FinSet) -> Relation {
        Relation {
            src: x.clone(),
            tgt: x.clone(),
            rows: (0..x.len()).map(|i| 1u64 << i).collect(),
        }
    }

    fn zero_object(&self) -> FinSet {
        FinSet::empty()
    }

    fn is_zero_object(&self, x: &FinSet) -> bool {
        x.is_empty()
    }

    fn zero_morphism(&self, x: &FinSet, y: &FinSet) -> Relation {
        Relation {
            src: x.clone(),
            tgt: y.clone(),
            rows: vec![0; x.len()],
        }
    }

    fn compose(&self, g: &Relation, f: &Relation) -> Result<Relation> {
        if f.tgt != g.src {
            return Err(Error::ObjectMismatch(format!("{:?} vs {:?}", f.tgt, g.src)));
        }
        let rows = f
            .rows
            .iter()
            .map(|&r| {
                (0..f.tgt.len())
                    .filter(|y| r >> y & 1 == 1)
                    .fold(0u64, |acc, y| acc | g.rows[y])
            })
            .collect();
        Ok(Relation {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            rows,
        })
    }

    fn dagger(&self, f: &Relation) -> Relation {
        let mut rows = vec![0u64; f.tgt.len()];
        for (x, &r) in f.rows.iter().enumerate() {
            for (y, row) in rows.iter_mut().enumerate() {
                if r >> y & 1 == 1 {
                    *row |= 1 << x;
                }
            }
        }
        Relation {
            src: f.tgt.clone(),
            tgt: f.src.clone(),
            rows,
        }
    }

    /// `K = {x | R(x) = ∅}` with its inclusion.
    fn kernel(&self, f: &Relation) -> Relation {
        let mask = !f.domain_mask() & f.src.full_mask();
        Relation::inclusion(&f.src, mask)
    }

    fn mor_eq(&self, f: &Relation, g: &Relation) -> bool {
        f == g
    }

    fn is_zero(&self, f: &Relation) -> bool {
        f.is_empty()
    }
}

impl Enumerable for FinRel {
    fn object_size(&self, x: &FinSet) -> usize {
        x.len()
    }

    fn objects_up_to(&self, max: usize) -> Vec<FinSet> {
        (0..=max).map(FinSet::range).collect()
    }

    fn homset_size(&self, x: &FinSet, y: &FinSet) -> u128 {
        let bits = (x.len() * y.len()) as u32;
        if bits >= 128 {
            u128::MAX
        } else {
            1u128 << bits
        }
    }

    fn enumerate_homset(&self, x: &FinSet, y: &FinSet, cap: u128) -> Result<Vec<Relation>> {
        let size = self.homset_size(x, y);
        if size > cap {
            return Err(Error::GuardExceeded { size, cap });
        }
        let (n, m) = (x.len(), y.len());
        let row_mask = y.full_mask();
        Ok((0..size)
            .map(|code| {
                let rows = (0..n)
                    .map(|i| ((code >> (i * m)) as u64) & row_mask)
                    .collect();
                Relation {
                    src: x.clone(),
                    tgt: y.clone(),
                    rows,
                }
            })
            .collect())
    }

    fn kernels_into(&self, x: &FinSet) -> Vec<Relation> {
        (0..=x.full_mask())
            .map(|mask| Relation::inclusion(x, mask))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dagcat::KernelOps;

    fn set(labels: &[&str]) -> FinSet {
        FinSet::new(labels.iter().copied()).unwrap()
    }

    #[test]
    fn composition_from_relational_chase() {
        let x = set(&["0", "1"]);
        let y = set(&["a", "b"]);
        let one = set(&["*"]);
        let r = Relation::from_label_pairs(x.clone(), y.clone(), &[("0", "a"), ("1", "a")]).unwrap();
        let s = Relation::from_label_pairs(one.clone(), x, &[("*", "0")]).unwrap();
        let rs = FinRel.compose(&r, &s).unwrap();
        let expected = Relation::from_label_pairs(one, y, &[("*", "a")]).unwrap();
        assert_eq!(rs, expected);
    }

    #[test]
    fn compose_rejects_mismatch() {
        let r = FinRel.identity(&FinSet::range(2));
        let s = FinRel.identity(&FinSet::range(3));
        assert!(matches!(FinRel.compose(&r, &s), Err(Error::ObjectMismatch(_))));
    }

    #[test]
    fn dagger_reverses() {
        let x = set(&["0", "1"]);
        let y = set(&["a"]);
        let r = Relation::from_label_pairs(x.clone(), y.clone(), &[("0", "a")]).unwrap();
        let d = FinRel.dagger(&r);
        assert_eq!(d, Relation::from_label_pairs(y, x, &[("a", "0")]).unwrap());
    }

    #[test]
    fn kernel_is_set_of_unrelated_points() {
        let x = set(&["0", "1"]);
        let y = set(&["a"]);
        let r = Relation::from_label_pairs(x.clone(), y, &[("0", "a")]).unwrap();
        let k = FinRel.kernel(&r);
        assert_eq!(k, Relation::inclusion(&x, 0b10));
        assert_eq!(k.src().labels(), ["1"]);
    }

    #[test]
    fn cokernel_projects_onto_unreached_points() {
        let x = set(&["0", "1"]);
        let y = set(&["a", "b"]);
        let r = Relation::from_label_pairs(x, y.clone(), &[("0", "a")]).unwrap();
        let c = FinRel.cokernel(&r);
        assert_eq!(c.src(), &y);
        assert_eq!(c.tgt().labels(), ["b"]);
        assert!(FinRel.is_zero(&FinRel.compose(&c, &r).unwrap()));
    }

    #[test]
    fn homset_counts() {
        let one = FinSet::range(1);
        assert_eq!(FinRel.enumerate_homset(&one, &one, 1 << 20).unwrap().len(), 2);
        let three = FinSet::range(3);
        assert_eq!(FinRel.enumerate_homset(&three, &three, 1 << 20).unwrap().len(), 512);
        assert!(matches!(
            FinRel.enumerate_homset(&three, &three, 100),
            Err(Error::GuardExceeded { size: 512, cap: 100 })
        ));
    }
}
