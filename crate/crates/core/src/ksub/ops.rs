//! Lattice operations, quantifiers and Sasaki connectives on kernel
//! subobjects, computed through the category.

use crate::category::KernelSub;
use crate::dagcat::KernelOps;
use crate::error::{Error, Result};

type Sub<C> = KernelSub<<C as crate::category::DaggerKernelCategory>::Morphism>;

pub trait LogicOps: KernelOps {
    /// `f⁻¹(n)` without the top edge.
    fn pullback_sub(&self, f: &Self::Morphism, n: &Sub<Self>) -> Result<Sub<Self>> {
        Ok(self.pullback_kernel(f, n)?.sub)
    }

    /// `m ∧ n = m ∘ m⁻¹(n)`, normalized.
    fn meet(&self, m: &Sub<Self>, n: &Sub<Self>) -> Result<Sub<Self>> {
        self.same_codomain(m, n)?;
        let p = self.pullback_sub(&m.mor, n)?;
        let mp = self.compose(&m.mor, &p.mor)?;
        Ok(self.normalize(&KernelSub::from_kernel(mp)))
    }

    /// `m ∨ n = (m⊥ ∧ n⊥)⊥`.
    fn join(&self, m: &Sub<Self>, n: &Sub<Self>) -> Result<Sub<Self>> {
        let inner = self.meet(&self.ortho(m), &self.ortho(n))?;
        Ok(self.ortho(&inner))
    }

    /// `∃_f(m)`, the image of `f ∘ m`.
    fn exists_along(&self, f: &Self::Morphism, m: &Sub<Self>) -> Result<Sub<Self>> {
        let (x, c) = (self.source(f), self.target(&m.mor));
        if x != c {
            return Err(Error::CodomainMismatch(format!("{c:?} vs {x:?}")));
        }
        Ok(self.image(&self.compose(f, &m.mor)?))
    }

    /// `∃_f(m) = ((f†)⁻¹(m⊥))⊥`.
    fn exists_alt(&self, f: &Self::Morphism, m: &Sub<Self>) -> Result<Sub<Self>> {
        let (x, c) = (self.source(f), self.target(&m.mor));
        if x != c {
            return Err(Error::CodomainMismatch(format!("{c:?} vs {x:?}")));
        }
        let pb = self.pullback_sub(&self.dagger(f), &self.ortho(m))?;
        Ok(self.ortho(&pb))
    }

    /// `⌈m⌉ = m ∘ m†`.
    fn effect_of(&self, m: &Sub<Self>) -> Self::Morphism {
        self.effect_endo(m)
    }

    /// The kernel `m` with `⌈m⌉ = p`, namely the image of `p`.
    fn effect_to_kernel(&self, p: &Self::Morphism) -> Result<Sub<Self>> {
        if !self.is_effect(p) {
            return Err(Error::NotSelfAdjointIdempotent);
        }
        Ok(self.image(p))
    }

    fn is_effect(&self, p: &Self::Morphism) -> bool {
        self.source(p) == self.target(p)
            && self.mor_eq(&self.dagger(p), p)
            && self
                .compose(p, p)
                .map(|pp| self.mor_eq(&pp, p))
                .unwrap_or(false)
    }

    /// `m ⊃ n = ⌈m⌉⁻¹(n)`.
    fn sasaki_hook(&self, m: &Sub<Self>, n: &Sub<Self>) -> Result<Sub<Self>> {
        self.same_codomain(m, n)?;
        self.pullback_sub(&self.effect_of(m), n)
    }

    /// `m ⊃ n = m⊥ ∨ (m ∧ n)`.
    fn sasaki_hook_formula(&self, m: &Sub<Self>, n: &Sub<Self>) -> Result<Sub<Self>> {
        self.join(&self.ortho(m), &self.meet(m, n)?)
    }

    /// `k & m = ∃_{⌈m⌉}(k)`.
    fn and_then(&self, k: &Sub<Self>, m: &Sub<Self>) -> Result<Sub<Self>> {
        self.same_codomain(k, m)?;
        self.exists_along(&self.effect_of(m), k)
    }

    /// `k & m = m ∧ (m⊥ ∨ k)`.
    fn and_then_formula(&self, k: &Sub<Self>, m: &Sub<Self>) -> Result<Sub<Self>> {
        self.meet(m, &self.join(&self.ortho(m), k)?)
    }

    /// `k ⇒ l = k⊥ ∨ (k ∧ l)`; a Heyting implication only in Boolean lattices.
    fn implication(&self, k: &Sub<Self>, l: &Sub<Self>) -> Result<Sub<Self>> {
        self.sasaki_hook_formula(k, l)
    }
}

impl<C: KernelOps + ?Sized> LogicOps for C {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::DaggerKernelCategory;
    use crate::instances::{BoolHat, FinRel, FinSet, Relation};

    #[test]
    fn box_and_diamond_in_rel() {
        let x = FinSet::range(2);
        let y = FinSet::new(["a", "b"]).unwrap();
        let r = Relation::from_label_pairs(x.clone(), y.clone(), &[("0", "a"), ("1", "a")]).unwrap();
        let b = KernelSub::from_kernel(Relation::inclusion(&y, 0b10));
        assert_eq!(FinRel.pullback_sub(&r, &b).unwrap().mor, Relation::inclusion(&x, 0));
        let m0 = KernelSub::from_kernel(Relation::inclusion(&x, 0b01));
        let e = FinRel.exists_along(&r, &m0).unwrap();
        assert_eq!(e.mor, Relation::inclusion(&y, 0b01));
        assert_eq!(FinRel.exists_alt(&r, &m0).unwrap().mor, e.mor);
    }

    #[test]
    fn boolhat_hook() {
        let b = BoolHat::new(["p", "q"]).unwrap();
        let top = b.top_elem();
        let sub = |atoms: &[&str]| {
            let e = b.element(atoms).unwrap();
            KernelSub::from_kernel(b.morphism(e, top, e).unwrap())
        };
        let (m, n) = (sub(&["p"]), sub(&["q"]));
        assert_eq!(b.sasaki_hook(&m, &n).unwrap().mor, sub(&["q"]).mor);
        assert_eq!(b.sasaki_hook_formula(&m, &n).unwrap().mor, sub(&["q"]).mor);
        assert_eq!(b.meet(&m, &n).unwrap().mor, b.bottom(&top).mor);
        assert!(b.is_identity(&b.join(&m, &n).unwrap().mor));
    }

    #[test]
    fn meet_rejects_different_codomains() {
        let a = FinRel.top(&FinSet::range(1));
        let b = FinRel.top(&FinSet::range(2));
        assert!(matches!(FinRel.meet(&a, &b), Err(Error::CodomainMismatch(_))));
    }
}
