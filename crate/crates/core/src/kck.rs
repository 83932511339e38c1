//! The category `D_kck` of cokernel-kernel pairs over a Boolean base.
//!
//! A morphism `X -> Y` is a pair `X ↠ M ↣ Y`, kept normalized: `k` is the
//! base's canonical kernel representative of its subobject and `c` absorbs
//! the induced dagger iso, so pair equality is componentwise.

use crate::category::{DaggerKernelCategory, Enumerable, KernelSub};
use crate::dagcat::KernelOps;
use crate::error::{Error, Result};
use crate::ksub::checks::check_boolean;
use crate::ksub::lattice::KSubLattice;

/// A normalized pair `(c, k)` with `c: X ↠ M` a cokernel and `k: M ↣ Y` a kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct KckMorphism<M> {
    pub c: M,
    pub k: M,
}

/// `D_kck` over the base category `C`.
#[derive(Debug, Clone)]
pub struct Kck<C> {
    base: C,
}

impl<C: Enumerable> Kck<C> {
    /// Checks Booleanness of the base on every `KSub(X)` with `|X| ≤ max_size`.
    pub fn new(base: C, max_size: usize) -> Result<Self> {
        for x in base.objects_up_to(max_size) {
            let l = KSubLattice::build(&base, &x)?;
            if let Err(w) = check_boolean(&base, &l) {
                return Err(Error::NotBoolean(format!("{x:?}: {}", w.note)));
            }
        }
        Ok(Kck { base })
    }
}

impl<C: KernelOps> Kck<C> {
    pub fn base(&self) -> &C {
        &self.base
    }

    /// Replaces `k` by `ker(coker k)` and `c` by `φ ∘ c` with `φ = k'† ∘ k`.
    pub fn normalize(&self, m: &KckMorphism<C::Morphism>) -> Result<KckMorphism<C::Morphism>> {
        let b = &self.base;
        let k2 = b.normalize(&KernelSub::from_kernel(m.k.clone())).mor;
        let phi = b.compose(&b.dagger(&k2), &m.k)?;
        Ok(KckMorphism {
            c: b.compose(&phi, &m.c)?,
            k: k2,
        })
    }

    /// A checked pair: `c` must be a cokernel and `k` a kernel.
    pub fn pair(&self, c: C::Morphism, k: C::Morphism) -> Result<KckMorphism<C::Morphism>> {
        let b = &self.base;
        if b.target(&c) != b.source(&k) {
            return Err(Error::ObjectMismatch(format!(
                "{:?} vs {:?}",
                b.target(&c),
                b.source(&k)
            )));
        }
        if !b.is_cokernel(&c) {
            return Err(Error::NotCokernel);
        }
        if !b.is_kernel(&k) {
            return Err(Error::NotKernel);
        }
        self.normalize(&KckMorphism { c, k })
    }

    /// `f ↦ (m_f ∘ coimage, image)`, defined when the middle part is a dagger iso.
    pub fn embed(&self, f: &C::Morphism) -> Result<KckMorphism<C::Morphism>> {
        let b = &self.base;
        let fac = b.full_factorise(f);
        if !b.is_dagger_iso(&fac.middle) {
            return Err(Error::MiddleNotInvertible);
        }
        self.normalize(&KckMorphism {
            c: fac.zero_epi_part,
            k: fac.image,
        })
    }

    /// `(c, k) ↦ k ∘ c`.
    pub fn project(&self, m: &KckMorphism<C::Morphism>) -> C::Morphism {
        self.base
            .compose(&m.k, &m.c)
            .expect("normalized pairs are composable")
    }
}

impl<C: KernelOps> DaggerKernelCategory for Kck<C> {
    type Object = C::Object;
    type Morphism = KckMorphism<C::Morphism>;

    fn name(&self) -> &'static str {
        "kck"
    }

    fn source(&self, f: &Self::Morphism) -> C::Object {
        self.base.source(&f.c)
    }

    fn target(&self, f: &Self::Morphism) -> C::Object {
        self.base.target(&f.k)
    }

    fn identity(&self, x: &C::Object) -> Self::Morphism {
        let id = self.base.identity(x);
        KckMorphism {
            c: id.clone(),
            k: id,
        }
    }

    fn zero_object(&self) -> C::Object {
        self.base.zero_object()
    }

    fn is_zero_object(&self, x: &C::Object) -> bool {
        self.base.is_zero_object(x)
    }

    /// `X ↠ 0 ↣ Y`.
    fn zero_morphism(&self, x: &C::Object, y: &C::Object) -> Self::Morphism {
        let b = &self.base;
        KckMorphism {
            c: b.cokernel(&b.identity(x)),
            k: b.kernel(&b.identity(y)),
        }
    }

    /// `(d, l) ∘ (c, k) = (q† ∘ c, l ∘ p)` with `q = k⁻¹(d†)` and `p` its top edge.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism> {
        let b = &self.base;
        let (y1, y2) = (b.target(&f.k), b.source(&g.c));
        if y1 != y2 {
            return Err(Error::ObjectMismatch(format!("{y1:?} vs {y2:?}")));
        }
        let dd = KernelSub::from_kernel(b.dagger(&g.c));
        let pb = b.pullback_kernel(&f.k, &dd)?;
        let c = b.compose(&b.dagger(&pb.sub.mor), &f.c)?;
        let k = b.compose(&g.k, &pb.top)?;
        self.normalize(&KckMorphism { c, k })
    }

    fn dagger(&self, f: &Self::Morphism) -> Self::Morphism {
        let b = &self.base;
        KckMorphism {
            c: b.dagger(&f.k),
            k: b.dagger(&f.c),
        }
    }

    /// `ker(d, l) = (id, ker d)`.
    fn kernel(&self, f: &Self::Morphism) -> Self::Morphism {
        let k = self.base.kernel(&f.c);
        KckMorphism {
            c: self.base.identity(&self.base.source(&k)),
            k,
        }
    }

    /// Pairs are equal up to a dagger iso of the middle object. Since `k` is
    /// dagger monic, `c = k† ∘ (k ∘ c)`, so this is equality of `k` as
    /// subobjects together with equality of the projections.
    fn mor_eq(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool {
        let b = &self.base;
        let same_k = b
            .subobject_eq(
                &KernelSub::from_kernel(f.k.clone()),
                &KernelSub::from_kernel(g.k.clone()),
            )
            .unwrap_or(false);
        same_k && b.mor_eq(&self.project(f), &self.project(g))
    }
}

impl<C: Enumerable> Enumerable for Kck<C> {
    fn object_size(&self, x: &C::Object) -> usize {
        self.base.object_size(x)
    }

    fn objects_up_to(&self, max: usize) -> Vec<C::Object> {
        self.base.objects_up_to(max)
    }

    /// Upper bound: the size of the base homset.
    fn homset_size(&self, x: &C::Object, y: &C::Object) -> u128 {
        self.base.homset_size(x, y)
    }

    fn enumerate_homset(
        &self,
        x: &C::Object,
        y: &C::Object,
        cap: u128,
    ) -> Result<Vec<Self::Morphism>> {
        let all = self.base.enumerate_homset(x, y, cap)?;
        Ok(all.iter().filter_map(|f| self.embed(f).ok()).collect())
    }

    fn kernels_into(&self, x: &C::Object) -> Vec<Self::Morphism> {
        self.base
            .kernels_into(x)
            .into_iter()
            .map(|k| KckMorphism {
                c: self.base.identity(&self.base.source(&k)),
                k,
            })
            .collect()
    }
}
