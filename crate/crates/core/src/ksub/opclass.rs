//! Kernel opclassifiers `KSub(X) ≅ Hom(1, X)`, natural in `X` via `∃`.

use crate::category::KernelSub;
use crate::dagcat::KernelOps;
use crate::error::Result;
use crate::instances::{BoolElem, BoolHat, BoolMor, FinRel, FinSet, Relation};
use crate::ksub::ops::LogicOps;

pub trait Opclassifier: KernelOps {
    /// The classifying object `1`.
    fn unit(&self) -> Self::Object;

    /// `char(M): 1 -> X`.
    fn char_of(&self, m: &KernelSub<Self::Morphism>) -> Self::Morphism;

    /// The inverse of [`Opclassifier::char_of`].
    fn unchar(&self, r: &Self::Morphism) -> KernelSub<Self::Morphism>;

    /// `S ∘ char(M) = char(∃_S(M))`.
    fn check_naturality(&self, s: &Self::Morphism, m: &KernelSub<Self::Morphism>) -> Result<bool> {
        let lhs = self.compose(s, &self.char_of(m))?;
        let rhs = self.char_of(&self.exists_along(s, m)?);
        Ok(self.mor_eq(&lhs, &rhs))
    }
}

impl Opclassifier for FinRel {
    fn unit(&self) -> FinSet {
        FinSet::new(["*"]).expect("one label")
    }

    /// `{(∗, x) | x ∈ M}`.
    fn char_of(&self, m: &KernelSub<Relation>) -> Relation {
        let x = m.mor.tgt().clone();
        let range = m.mor.range_mask();
        Relation::from_rows(self.unit(), x, vec![range]).expect("range lies in X")
    }

    fn unchar(&self, r: &Relation) -> KernelSub<Relation> {
        KernelSub::from_kernel(Relation::inclusion(r.tgt(), r.range_mask()))
    }
}

impl Opclassifier for BoolHat {
    fn unit(&self) -> BoolElem {
        self.top_elem()
    }

    /// `(m ≤ x) ↦ (m: 1 -> x)`.
    fn char_of(&self, m: &KernelSub<BoolMor>) -> BoolMor {
        BoolMor {
            src: self.top_elem(),
            tgt: m.mor.tgt,
            elem: m.mor.elem,
        }
    }

    fn unchar(&self, r: &BoolMor) -> KernelSub<BoolMor> {
        KernelSub::from_kernel(BoolMor {
            src: r.elem,
            tgt: r.tgt,
            elem: r.elem,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{DaggerKernelCategory, Enumerable};

    #[test]
    fn rel_char_of_singleton() {
        let x = FinSet::range(2);
        let m = KernelSub::from_kernel(Relation::inclusion(&x, 0b01));
        let c = FinRel.char_of(&m);
        assert_eq!(c, Relation::from_label_pairs(FinRel.unit(), x.clone(), &[("*", "0")]).unwrap());
        assert!(FinRel.is_zero(&FinRel.char_of(&FinRel.bottom(&x))));
    }

    #[test]
    fn char_is_a_natural_bijection() {
        let x = FinSet::range(2);
        let hom = FinRel.enumerate_homset(&FinRel.unit(), &x, 1 << 20).unwrap();
        let subs = FinRel.kernels_into(&x);
        assert_eq!(hom.len(), subs.len());
        for r in &hom {
            assert_eq!(&FinRel.char_of(&FinRel.unchar(r)), r);
        }
        for s in FinRel.enumerate_homset(&x, &x, 1 << 20).unwrap() {
            for m in &subs {
                let m = KernelSub::from_kernel(m.clone());
                assert!(FinRel.check_naturality(&s, &m).unwrap());
            }
        }
    }
}
