//! Explicit finite kernel lattices with precomputed tables.

use crate::category::{DaggerKernelCategory, Enumerable, KernelSub};
use crate::dagcat::KernelOps;
use crate::error::{Error, Result};
use crate::ksub::ops::LogicOps;

/// A finite sublattice of `KSub(X)`, closed under meet, join and `⊥`.
#[derive(Debug)]
pub struct KSubLattice<C: DaggerKernelCategory> {
    pub codomain: C::Object,
    pub elements: Vec<KernelSub<C::Morphism>>,
    /// `leq[i][j]` iff `elements[i] ≤ elements[j]`.
    pub leq: Vec<Vec<bool>>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub ortho: Vec<usize>,
    pub bottom: usize,
    pub top: usize,
}

impl<C: DaggerKernelCategory> Clone for KSubLattice<C> {
    fn clone(&self) -> Self {
        KSubLattice {
            codomain: self.codomain.clone(),
            elements: self.elements.clone(),
            leq: self.leq.clone(),
            meet: self.meet.clone(),
            join: self.join.clone(),
            ortho: self.ortho.clone(),
            bottom: self.bottom,
            top: self.top,
        }
    }
}

fn lookup<C: KernelOps>(cat: &C, elems: &[KernelSub<C::Morphism>], m: &KernelSub<C::Morphism>) -> Option<usize> {
    elems
        .iter()
        .position(|e| cat.subobject_eq(e, m).unwrap_or(false))
}

impl<C: DaggerKernelCategory> KSubLattice<C> {
    /// All of `KSub(x)`.
    pub fn build(cat: &C, x: &C::Object) -> Result<Self>
    where
        C: Enumerable,
    {
        let elems = cat.kernels_into(x).into_iter().map(KernelSub::from_kernel).collect();
        KSubLattice::from_elements(cat, x, elems)
    }

    /// The lattice on an explicit element list, which must contain `0`, `1`
    /// and be closed under the operations. Duplicates are merged.
    pub fn from_elements(
        cat: &C,
        x: &C::Object,
        elements: Vec<KernelSub<C::Morphism>>,
    ) -> Result<Self> {
        let mut elems: Vec<KernelSub<C::Morphism>> = Vec::new();
        for m in elements {
            if cat.target(&m.mor) != *x {
                return Err(Error::CodomainMismatch(format!(
                    "{:?} vs {x:?}",
                    cat.target(&m.mor)
                )));
            }
            if !cat.is_kernel(&m.mor) {
                return Err(Error::NotKernel);
            }
            if lookup(cat, &elems, &m).is_none() {
                elems.push(cat.normalize(&m));
            }
        }
        let n = elems.len();
        let bottom = lookup(cat, &elems, &cat.bottom(x)).ok_or(Error::NotClosed("bottom"))?;
        let top = lookup(cat, &elems, &cat.top(x)).ok_or(Error::NotClosed("top"))?;
        let mut leq = vec![vec![false; n]; n];
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        let mut ortho = vec![0; n];
        for i in 0..n {
            ortho[i] = lookup(cat, &elems, &cat.ortho(&elems[i])).ok_or(Error::NotClosed("ortho"))?;
            for j in 0..n {
                leq[i][j] = cat.subobject_leq(&elems[i], &elems[j])?;
                if j < i {
                    meet[i][j] = meet[j][i];
                    join[i][j] = join[j][i];
                    continue;
                }
                let mm = cat.meet(&elems[i], &elems[j])?;
                meet[i][j] = lookup(cat, &elems, &mm).ok_or(Error::NotClosed("meet"))?;
                let jj = cat.join(&elems[i], &elems[j])?;
                join[i][j] = lookup(cat, &elems, &jj).ok_or(Error::NotClosed("join"))?;
            }
        }
        Ok(KSubLattice {
            codomain: x.clone(),
            elements: elems,
            leq,
            meet,
            join,
            ortho,
            bottom,
            top,
        })
    }

    /// Closes `generators` under `0`, `1`, `⊥`, meet and join, failing once the
    /// set exceeds `cap` elements.
    pub fn generate(
        cat: &C,
        x: &C::Object,
        generators: Vec<KernelSub<C::Morphism>>,
        cap: usize,
    ) -> Result<Self> {
        let mut elems: Vec<KernelSub<C::Morphism>> = Vec::new();
        let push = |elems: &mut Vec<KernelSub<C::Morphism>>, m: KernelSub<C::Morphism>| -> Result<bool> {
            if lookup(cat, elems, &m).is_some() {
                return Ok(false);
            }
            if elems.len() >= cap {
                return Err(Error::NotClosed("generation cap"));
            }
            elems.push(cat.normalize(&m));
            Ok(true)
        };
        push(&mut elems, cat.bottom(x))?;
        push(&mut elems, cat.top(x))?;
        for g in generators {
            push(&mut elems, g)?;
        }
        loop {
            let mut grew = false;
            let snapshot = elems.clone();
            for a in &snapshot {
                grew |= push(&mut elems, cat.ortho(a))?;
                for b in &snapshot {
                    grew |= push(&mut elems, cat.meet(a, b)?)?;
                    grew |= push(&mut elems, cat.join(a, b)?)?;
                }
            }
            if !grew {
                break;
            }
        }
        KSubLattice::from_elements(cat, x, elems)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, cat: &C, m: &KernelSub<C::Morphism>) -> Option<usize> {
        lookup(cat, &self.elements, m)
    }

    /// `i < j` with nothing strictly between.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        i != j
            && self.leq[i][j]
            && !(0..self.len()).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j])
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.covers(self.bottom, a)).collect()
    }

    /// Every nonzero element lies above an atom.
    pub fn is_atomic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.len())
            .filter(|&i| i != self.bottom)
            .all(|i| atoms.iter().any(|&a| self.leq[a][i]))
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.len()).all(|i| {
            let j = atoms
                .iter()
                .filter(|&&a| self.leq[a][i])
                .fold(self.bottom, |acc, &a| self.join[acc][a]);
            j == i
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{BoolHat, FinPInj, FinRel, FinSet};

    #[test]
    fn powerset_square() {
        let l = KSubLattice::build(&FinRel, &FinSet::range(2)).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l.atoms().len(), 2);
        assert!(l.is_atomic() && l.is_atomistic());
        let l3 = KSubLattice::build(&FinPInj, &FinSet::range(3)).unwrap();
        assert_eq!(l3.len(), 8);
    }

    #[test]
    fn boolhat_chain() {
        let b = BoolHat::new(["p", "q"]).unwrap();
        let p = b.element(&["p"]).unwrap();
        let l = KSubLattice::build(&b, &p).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.leq[l.bottom][l.top]);
    }

    #[test]
    fn unclosed_list_is_rejected() {
        let x = FinSet::range(2);
        let only = vec![FinRel.bottom(&x), FinRel.top(&x), KernelSub::from_kernel(crate::instances::Relation::inclusion(&x, 1))];
        assert!(matches!(
            KSubLattice::from_elements(&FinRel, &x, only),
            Err(Error::NotClosed("ortho"))
        ));
    }
}
