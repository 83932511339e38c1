//! The dagger kernel category `B̂` of a finite Boolean algebra `B`.
//!
//! `B` is the powerset of an atom list, elements are bitmasks. Objects are
//! elements `x`; a morphism `x -> y` is an element `f ≤ x ∧ y`; composition is
//! meet and the dagger is the identity on the underlying element.

use std::sync::Arc;

use crate::category::{DaggerKernelCategory, Enumerable};
use crate::error::{Error, Result};
use crate::instances::finset::{mask_of_len, MAX_POINTS};

/// An element of the ambient Boolean algebra, as a bitmask over its atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolElem(pub u64);

impl BoolElem {
    pub fn leq(self, other: BoolElem) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meet(self, other: BoolElem) -> BoolElem {
        BoolElem(self.0 & other.0)
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }
}

/// A morphism `src -> tgt` given by `elem ≤ src ∧ tgt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoolMor {
    pub src: BoolElem,
    pub tgt: BoolElem,
    pub elem: BoolElem,
}

/// `B̂` for the powerset algebra of `atoms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolHat {
    atoms: Arc<[String]>,
}

impl BoolHat {
    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.len() > MAX_POINTS {
            return Err(Error::InvalidObject(format!("more than {MAX_POINTS} atoms")));
        }
        let mut sorted = atoms.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidObject("duplicate atom".into()));
        }
        Ok(BoolHat {
            atoms: atoms.into(),
        })
    }

    /// The powerset of `{0, ..., n-1}`.
    pub fn powerset(n: usize) -> Self {
        BoolHat::new((0..n).map(|i| i.to_string())).expect("distinct atoms")
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn top_elem(&self) -> BoolElem {
        BoolElem(mask_of_len(self.atoms.len()))
    }

    /// Every element of the algebra, in bitmask order.
    pub fn elements(&self) -> Vec<BoolElem> {
        (0..=self.top_elem().0).map(BoolElem).collect()
    }

    pub fn element(&self, atoms: &[&str]) -> Result<BoolElem> {
        atoms.iter().try_fold(BoolElem(0), |acc, a| {
            self.atoms
                .iter()
                .position(|x| x == a)
                .map(|i| BoolElem(acc.0 | 1 << i))
                .ok_or_else(|| Error::InvalidObject(format!("unknown atom {a}")))
        })
    }

    pub fn atom_names(&self, e: BoolElem) -> Vec<&str> {
        (0..self.atoms.len())
            .filter(|i| e.0 >> i & 1 == 1)
            .map(|i| self.atoms[i].as_str())
            .collect()
    }

    pub fn contains(&self, e: BoolElem) -> bool {
        e.leq(self.top_elem())
    }

    pub fn morphism(&self, src: BoolElem, tgt: BoolElem, elem: BoolElem) -> Result<BoolMor> {
        for e in [src, tgt, elem] {
            if !self.contains(e) {
                return Err(Error::InstanceMismatch(format!(
                    "element {:#b} outside the algebra",
                    e.0
                )));
            }
        }
        if !elem.leq(src.meet(tgt)) {
            return Err(Error::InvalidPayload(format!(
                "{:?} is not below {:?} ∧ {:?}",
                self.atom_names(elem),
                self.atom_names(src),
                self.atom_names(tgt)
            )));
        }
        Ok(BoolMor { src, tgt, elem })
    }

    /// Relative complement `¬m ∧ x`.
    pub fn complement_in(&self, m: BoolElem, x: BoolElem) -> BoolElem {
        BoolElem(!m.0 & x.0)
    }
}

fn submasks(x: u64) -> impl Iterator<Item = u64> {
    // Increasing enumeration of all s ⊆ x.
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == x {
            None
        } else {
            Some(((cur | !x).wrapping_add(1)) & x)
        };
        Some(cur)
    })
}

impl DaggerKernelCategory for BoolHat {
    type Object = BoolElem;
    type Morphism = BoolMor;

    fn name(&self) -> &'static str {
        "boolhat"
    }

    fn source(&self, f: &BoolMor) -> BoolElem {
        f.src
    }

    fn target(&self, f: &BoolMor) -> BoolElem {
        f.tgt
    }

    fn identity(&self, x: &BoolElem) -> BoolMor {
        BoolMor {
            src: *x,
            tgt: *x,
            elem: *x,
        }
    }

    fn zero_object(&self) -> BoolElem {
        BoolElem(0)
    }

    fn is_zero_object(&self, x: &BoolElem) -> bool {
        x.0 == 0
    }

    fn zero_morphism(&self, x: &BoolElem, y: &BoolElem) -> BoolMor {
        BoolMor {
            src: *x,
            tgt: *y,
            elem: BoolElem(0),
        }
    }

    fn compose(&self, g: &BoolMor, f: &BoolMor) -> Result<BoolMor> {
        if !self.contains(f.src) || !self.contains(g.tgt) || !self.contains(f.tgt) {
            return Err(Error::InstanceMismatch("element outside the algebra".into()));
        }
        if f.tgt != g.src {
            return Err(Error::ObjectMismatch(format!(
                "{:?} vs {:?}",
                self.atom_names(f.tgt),
                self.atom_names(g.src)
            )));
        }
        Ok(BoolMor {
            src: f.src,
            tgt: g.tgt,
            elem: f.elem.meet(g.elem),
        })
    }

    fn dagger(&self, f: &BoolMor) -> BoolMor {
        BoolMor {
            src: f.tgt,
            tgt: f.src,
            elem: f.elem,
        }
    }

    /// `ker(f) = ¬f ∧ x` as the map `ker(f) -> x`.
    fn kernel(&self, f: &BoolMor) -> BoolMor {
        let k = self.complement_in(f.elem, f.src);
        BoolMor {
            src: k,
            tgt: f.src,
            elem: k,
        }
    }

    fn mor_eq(&self, f: &BoolMor, g: &BoolMor) -> bool {
        f == g
    }
}

impl Enumerable for BoolHat {
    fn object_size(&self, x: &BoolElem) -> usize {
        x.size()
    }

    fn objects_up_to(&self, max: usize) -> Vec<BoolElem> {
        (0..=max.min(self.atoms.len()))
            .map(|k| BoolElem(mask_of_len(k)))
            .collect()
    }

    /// Every element of size at most `max`.
    fn sweep_objects(&self, max: usize) -> Vec<BoolElem> {
        self.elements().into_iter().filter(|e| e.size() <= max).collect()
    }

    fn homset_size(&self, x: &BoolElem, y: &BoolElem) -> u128 {
        1u128 << x.meet(*y).size()
    }

    fn enumerate_homset(&self, x: &BoolElem, y: &BoolElem, cap: u128) -> Result<Vec<BoolMor>> {
        let size = self.homset_size(x, y);
        if size > cap {
            return Err(Error::GuardExceeded { size, cap });
        }
        Ok(submasks(x.meet(*y).0)
            .map(|e| BoolMor {
                src: *x,
                tgt: *y,
                elem: BoolElem(e),
            })
            .collect())
    }

    fn kernels_into(&self, x: &BoolElem) -> Vec<BoolMor> {
        submasks(x.0)
            .map(|m| BoolMor {
                src: BoolElem(m),
                tgt: *x,
                elem: BoolElem(m),
            })
            .collect()
    }
}
