//! Finite sets and partial injections.

use crate::category::{DaggerKernelCategory, Enumerable};
use crate::error::{Error, Result};
use crate::instances::finset::FinSet;

/// A partial injection given by its table `x ↦ f(x)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialInjection {
    src: FinSet,
    tgt: FinSet,
    map: Vec<Option<usize>>,
}

impl PartialInjection {
    pub fn new(src: FinSet, tgt: FinSet, map: Vec<Option<usize>>) -> Result<Self> {
        if map.len() != src.len() {
            return Err(Error::InvalidPayload(format!(
                "table of length {} for a source of size {}",
                map.len(),
                src.len()
            )));
        }
        let mut seen = 0u64;
        for y in map.iter().flatten() {
            if *y >= tgt.len() {
                return Err(Error::InvalidPayload(format!("target index {y} out of range")));
            }
            if seen >> y & 1 == 1 {
                return Err(Error::InvalidPayload(format!(
                    "not injective: {} hit twice",
                    tgt.labels()[*y]
                )));
            }
            seen |= 1 << y;
        }
        Ok(PartialInjection { src, tgt, map })
    }

    /// Builds from label pairs `x ↦ y`.
    pub fn from_label_pairs(src: FinSet, tgt: FinSet, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut map = vec![None; src.len()];
        for (a, b) in pairs {
            let (Some(x), Some(y)) = (src.index_of(a), tgt.index_of(b)) else {
                return Err(Error::InvalidPayload(format!("unknown label in {a} -> {b}")));
            };
            if map[x].is_some() {
                return Err(Error::InvalidPayload(format!("not single-valued at {a}")));
            }
            map[x] = Some(y);
        }
        PartialInjection::new(src, tgt, map)
    }

    /// Inclusion of the subset `mask` of `x`.
    pub fn inclusion(x: &FinSet, mask: u64) -> Self {
        let (sub, idx) = x.subset(mask);
        PartialInjection {
            src: sub,
            tgt: x.clone(),
            map: idx.into_iter().map(Some).collect(),
        }
    }

    pub fn src(&self) -> &FinSet {
        &self.src
    }

    pub fn tgt(&self) -> &FinSet {
        &self.tgt
    }

    pub fn table(&self) -> &[Option<usize>] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map[x]
    }

    /// Bitmask of the points where the map is defined.
    pub fn domain_mask(&self) -> u64 {
        self.map
            .iter()
            .enumerate()
            .fold(0, |a, (x, y)| if y.is_some() { a | 1 << x } else { a })
    }

    pub fn range_mask(&self) -> u64 {
        self.map.iter().flatten().fold(0, |a, y| a | 1 << y)
    }

    /// The span legs `(f₁, f₂)` with apex the domain of definition: `f₁` is
    /// the inclusion of the domain and `f₂` the injection into the target.
    pub fn legs(&self) -> (PartialInjection, PartialInjection) {
        let dom = self.domain_mask();
        let f1 = PartialInjection::inclusion(&self.src, dom);
        let f2 = PartialInjection {
            src: f1.src.clone(),
            tgt: self.tgt.clone(),
            map: self.map.iter().flatten().map(|&y| Some(y)).collect(),
        };
        (f1, f2)
    }

    /// `f ⊆ g`: `g` extends `f`.
    pub fn is_extended_by(&self, g: &PartialInjection) -> bool {
        self.src == g.src
            && self.tgt == g.tgt
            && self
                .map
                .iter()
                .zip(&g.map)
                .all(|(a, b)| a.is_none() || a == b)
    }
}

impl std::fmt::Debug for PartialInjection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let entries: Vec<String> = self
            .map
            .iter()
            .enumerate()
            .filter_map(|(x, y)| {
                y.map(|y| format!("{}↦{}", self.src.labels()[x], self.tgt.labels()[y]))
            })
            .collect();
        write!(f, "{:?}->{:?} {{{}}}", self.src, self.tgt, entries.join(","))
    }
}

/// The category of finite sets and partial injections.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinPInj;

impl DaggerKernelCategory for FinPInj {
    type Object = FinSet;
    type Morphism = PartialInjection;

    fn name(&self) -> &'static str {
        "finpinj"
    }

    fn source(&self, f: &PartialInjection) -> FinSet {
        f.src.clone()
    }

    fn target(&self, f: &PartialInjection) -> FinSet {
        f.tgt.clone()
    }

    fn identity(&self, x: &FinSet) -> PartialInjection {
        PartialInjection {
            src: x.clone(),
            tgt: x.clone(),
            map: (0..x.len()).map(Some).collect(),
        }
    }

    fn zero_object(&self) -> FinSet {
        FinSet::empty()
    }

    fn is_zero_object(&self, x: &FinSet) -> bool {
        x.is_empty()
    }

    fn zero_morphism(&self, x: &FinSet, y: &FinSet) -> PartialInjection {
        PartialInjection {
            src: x.clone(),
            tgt: y.clone(),
            map: vec![None; x.len()],
        }
    }

    fn compose(&self, g: &PartialInjection, f: &PartialInjection) -> Result<PartialInjection> {
        if f.tgt != g.src {
            return Err(Error::ObjectMismatch(format!("{:?} vs {:?}", f.tgt, g.src)));
        }
        Ok(PartialInjection {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            map: f.map.iter().map(|y| y.and_then(|y| g.map[y])).collect(),
        })
    }

    fn dagger(&self, f: &PartialInjection) -> PartialInjection {
        let mut map = vec![None; f.tgt.len()];
        for (x, y) in f.map.iter().enumerate() {
            if let Some(y) = y {
                map[*y] = Some(x);
            }
        }
        PartialInjection {
            src: f.tgt.clone(),
            tgt: f.src.clone(),
            map,
        }
    }

    /// The complement of the domain of definition, with its inclusion.
    fn kernel(&self, f: &PartialInjection) -> PartialInjection {
        let mask = !f.domain_mask() & f.src.full_mask();
        PartialInjection::inclusion(&f.src, mask)
    }

    fn mor_eq(&self, f: &PartialInjection, g: &PartialInjection) -> bool {
        f == g
    }

    fn is_zero(&self, f: &PartialInjection) -> bool {
        f.map.iter().all(Option::is_none)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `∑_k C(n,k) C(m,k) k!`
pub fn partial_injection_count(n: usize, m: usize) -> u128 {
    let (n, m) = (n as u128, m as u128);
    (0..=n.min(m))
        .map(|k| binomial(n, k) * binomial(m, k) * (1..=k).product::<u128>())
        .sum()
}

impl Enumerable for FinPInj {
    fn object_size(&self, x: &FinSet) -> usize {
        x.len()
    }

    fn objects_up_to(&self, max: usize) -> Vec<FinSet> {
        (0..=max).map(FinSet::range).collect()
    }

    fn homset_size(&self, x: &FinSet, y: &FinSet) -> u128 {
        partial_injection_count(x.len(), y.len())
    }

    fn enumerate_homset(
        &self,
        x: &FinSet,
        y: &FinSet,
        cap: u128,
    ) -> Result<Vec<PartialInjection>> {
        let size = self.homset_size(x, y);
        if size > cap {
            return Err(Error::GuardExceeded { size, cap });
        }
        fn go(
            i: usize,
            n: usize,
            m: usize,
            used: u64,
            cur: &mut Vec<Option<usize>>,
            out: &mut Vec<Vec<Option<usize>>>,
        ) {
            if i == n {
                out.push(cur.clone());
                return;
            }
            cur.push(None);
            go(i + 1, n, m, used, cur, out);
            cur.pop();
            for y in 0..m {
                if used >> y & 1 == 0 {
                    cur.push(Some(y));
                    go(i + 1, n, m, used | 1 << y, cur, out);
                    cur.pop();
                }
            }
        }
        let mut tables = Vec::new();
        go(0, x.len(), y.len(), 0, &mut Vec::new(), &mut tables);
        Ok(tables
            .into_iter()
            .map(|map| PartialInjection {
                src: x.clone(),
                tgt: y.clone(),
                map,
            })
            .collect())
    }

    fn kernels_into(&self, x: &FinSet) -> Vec<PartialInjection> {
        (0..=x.full_mask())
            .map(|mask| PartialInjection::inclusion(x, mask))
            .collect()
    }
}
