//! The graph functor `Sets -> Rel`, the `ℓ²` functor `PInj -> Hilb`, and the
//! inclusion `PInj -> Rel`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::instances::fdhilb::{Dim, LinearMap};
use crate::instances::finpinj::PartialInjection;
use crate::instances::finrel::Relation;
use crate::instances::finset::FinSet;

/// A total function between finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunction {
    src: FinSet,
    tgt: FinSet,
    map: Vec<usize>,
}

impl FinFunction {
    pub fn new(src: FinSet, tgt: FinSet, map: Vec<usize>) -> Result<Self> {
        if map.len() != src.len() || map.iter().any(|&y| y >= tgt.len()) {
            return Err(Error::InvalidPayload("function table does not fit its objects".into()));
        }
        Ok(FinFunction { src, tgt, map })
    }

    pub fn identity(x: &FinSet) -> Self {
        FinFunction {
            src: x.clone(),
            tgt: x.clone(),
            map: (0..x.len()).collect(),
        }
    }

    /// `g ∘ f`.
    pub fn then(&self, g: &FinFunction) -> Result<FinFunction> {
        if self.tgt != g.src {
            return Err(Error::ObjectMismatch(format!("{:?} vs {:?}", self.tgt, g.src)));
        }
        Ok(FinFunction {
            src: self.src.clone(),
            tgt: g.tgt.clone(),
            map: self.map.iter().map(|&y| g.map[y]).collect(),
        })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Every function `x -> y`, in lexicographic table order.
    pub fn all(x: &FinSet, y: &FinSet) -> Vec<FinFunction> {
        let (n, m) = (x.len(), y.len());
        if m == 0 {
            return if n == 0 {
                vec![FinFunction::identity(x)]
            } else {
                Vec::new()
            };
        }
        let total = m.pow(n as u32);
        (0..total)
            .map(|mut code| {
                let map = (0..n)
                    .map(|_| {
                        let d = code % m;
                        code /= m;
                        d
                    })
                    .collect();
                FinFunction {
                    src: x.clone(),
                    tgt: y.clone(),
                    map,
                }
            })
            .collect()
    }
}

/// `G(f) = {(x, f(x))}`.
pub fn graph_functor(f: &FinFunction) -> Relation {
    let pairs: Vec<(usize, usize)> = f.map.iter().copied().enumerate().collect();
    Relation::from_pairs(f.src.clone(), f.tgt.clone(), &pairs).expect("graph fits its objects")
}

/// `ℓ²(f)` sends `e_x` to `e_{f(x)}` where defined and to `0` elsewhere.
pub fn l2_functor(f: &PartialInjection) -> LinearMap {
    let (n, m) = (f.src().len(), f.tgt().len());
    let mut mat = DMatrix::zeros(m, n);
    for (x, y) in f.table().iter().enumerate() {
        if let Some(y) = y {
            mat[(*y, x)] = Complex64::new(1.0, 0.0);
        }
    }
    LinearMap::new(Dim(n), Dim(m), mat).expect("shape fits")
}

/// The inclusion `PInj -> Rel`.
pub fn pinj_to_relation(f: &PartialInjection) -> Relation {
    let pairs: Vec<(usize, usize)> = f
        .table()
        .iter()
        .enumerate()
        .filter_map(|(x, y)| y.map(|y| (x, y)))
        .collect();
    Relation::from_pairs(f.src().clone(), f.tgt().clone(), &pairs).expect("fits")
}

/// The partial injection underlying `r`, if `r` is one.
pub fn relation_to_pinj(r: &Relation) -> Option<PartialInjection> {
    let map: Option<Vec<Option<usize>>> = r
        .rows()
        .iter()
        .map(|&row| match row.count_ones() {
            0 => Some(None),
            1 => Some(Some(row.trailing_zeros() as usize)),
            _ => None,
        })
        .collect();
    PartialInjection::new(r.src().clone(), r.tgt().clone(), map?).ok()
}
