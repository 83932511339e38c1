//! Constructions available in every dagger kernel category.
//!
//! All of these are written once against [`DaggerKernelCategory`] and pick up
//! the instance rules through the trait. Kernel subobjects are compared
//! through the factorisation test `coker(n) ∘ m = 0`, never by representation.

use serde::Serialize;

use crate::category::{DaggerKernelCategory, KernelSub};
use crate::error::{Error, Result};

/// The pullback of a kernel `n: N ↣ Y` along `f: X -> Y`.
#[derive(Debug, Clone)]
pub struct KernelPullback<M> {
    /// `f⁻¹(n) = ker(coker(n) ∘ f)`, a kernel into `X`.
    pub sub: KernelSub<M>,
    /// The top edge `f′: M -> N` with `n ∘ f′ = f ∘ f⁻¹(n)`.
    pub top: M,
}

/// Image factorisation `f = i_f ∘ e_f`.
#[derive(Debug, Clone)]
pub struct ImageFactorisation<M> {
    pub zero_epi: M,
    pub image: KernelSub<M>,
}

/// Four-way factorisation `f = image ∘ middle ∘ coimage`.
#[derive(Debug, Clone)]
pub struct Factorisation<M> {
    /// `(i_{f†})†: X ↠ Im(f†)`, a cokernel.
    pub coimage: M,
    /// `m_f: Im(f†) -> Im(f)`, both zero-epi and zero-mono.
    pub middle: M,
    /// `i_f: Im(f) ↣ Y`, a kernel.
    pub image: M,
    /// `e_f = m_f ∘ coimage`.
    pub zero_epi_part: M,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_zero: bool,
    pub is_dagger_mono: bool,
    pub is_dagger_epi: bool,
    pub is_zero_mono: bool,
    pub is_zero_epi: bool,
    pub is_kernel: bool,
    pub is_cokernel: bool,
}

fn mismatch<O: std::fmt::Debug>(a: &O, b: &O) -> String {
    format!("{a:?} vs {b:?}")
}

/// Derived structure of a dagger kernel category.
pub trait KernelOps: DaggerKernelCategory {
    /// Checks that `m` is a dagger-monic kernel and wraps it.
    fn kernel_sub_checked(&self, m: Self::Morphism) -> Result<KernelSub<Self::Morphism>> {
        if !self.is_kernel(&m) {
            return Err(Error::NotKernel);
        }
        Ok(KernelSub::from_kernel(m))
    }

    fn kernel_sub(&self, f: &Self::Morphism) -> KernelSub<Self::Morphism> {
        KernelSub::from_kernel(self.kernel(f))
    }

    /// `coker(f) = ker(f†)†`.
    fn cokernel(&self, f: &Self::Morphism) -> Self::Morphism {
        self.dagger(&self.kernel(&self.dagger(f)))
    }

    /// The top element `id_X` of `KSub(X)`.
    fn top(&self, x: &Self::Object) -> KernelSub<Self::Morphism> {
        KernelSub::from_kernel(self.identity(x))
    }

    /// The bottom element `0 ↣ X` of `KSub(X)`.
    fn bottom(&self, x: &Self::Object) -> KernelSub<Self::Morphism> {
        KernelSub::from_kernel(self.kernel(&self.identity(x)))
    }

    /// Canonical representative of the subobject, `ker(coker(m))`.
    fn normalize(&self, m: &KernelSub<Self::Morphism>) -> KernelSub<Self::Morphism> {
        KernelSub::from_kernel(self.kernel(&self.cokernel(&m.mor)))
    }

    /// `m⊥ = ker(m†)`.
    fn ortho(&self, m: &KernelSub<Self::Morphism>) -> KernelSub<Self::Morphism> {
        KernelSub::from_kernel(self.kernel(&self.dagger(&m.mor)))
    }

    fn same_codomain(
        &self,
        m: &KernelSub<Self::Morphism>,
        n: &KernelSub<Self::Morphism>,
    ) -> Result<Self::Object> {
        let a = self.target(&m.mor);
        let b = self.target(&n.mor);
        if a != b {
            return Err(Error::CodomainMismatch(mismatch(&a, &b)));
        }
        Ok(a)
    }

    /// `f⁻¹(n) = ker(coker(n) ∘ f)` together with the top edge of the square.
    fn pullback_kernel(
        &self,
        f: &Self::Morphism,
        n: &KernelSub<Self::Morphism>,
    ) -> Result<KernelPullback<Self::Morphism>> {
        let (y, n_cod) = (self.target(f), self.target(&n.mor));
        if y != n_cod {
            return Err(Error::ObjectMismatch(mismatch(&y, &n_cod)));
        }
        let m = self.kernel(&self.compose(&self.cokernel(&n.mor), f)?);
        let fm = self.compose(f, &m)?;
        let top = self.compose(&self.dagger(&n.mor), &fm)?;
        Ok(KernelPullback {
            sub: KernelSub::from_kernel(m),
            top,
        })
    }

    fn subobject_leq(
        &self,
        m: &KernelSub<Self::Morphism>,
        n: &KernelSub<Self::Morphism>,
    ) -> Result<bool> {
        self.same_codomain(m, n)?;
        let c = self.compose(&self.cokernel(&n.mor), &m.mor)?;
        Ok(self.is_zero(&c))
    }

    fn subobject_eq(
        &self,
        m: &KernelSub<Self::Morphism>,
        n: &KernelSub<Self::Morphism>,
    ) -> Result<bool> {
        Ok(self.subobject_leq(m, n)? && self.subobject_leq(n, m)?)
    }

    /// The mediating map `n† ∘ m: M -> N` when `m ≤ n`.
    fn mediating_map(
        &self,
        m: &KernelSub<Self::Morphism>,
        n: &KernelSub<Self::Morphism>,
    ) -> Result<Option<Self::Morphism>> {
        if !self.subobject_leq(m, n)? {
            return Ok(None);
        }
        Ok(Some(self.compose(&self.dagger(&n.mor), &m.mor)?))
    }

    fn is_dagger_mono(&self, f: &Self::Morphism) -> bool {
        self.compose(&self.dagger(f), f)
            .map(|g| self.is_identity(&g))
            .unwrap_or(false)
    }

    fn is_dagger_epi(&self, f: &Self::Morphism) -> bool {
        self.is_dagger_mono(&self.dagger(f))
    }

    fn is_dagger_iso(&self, f: &Self::Morphism) -> bool {
        self.is_dagger_mono(f) && self.is_dagger_epi(f)
    }

    /// `m` is a zero-mono iff `ker(m) = 0`.
    fn is_zero_mono(&self, f: &Self::Morphism) -> bool {
        self.is_zero_object(&self.source(&self.kernel(f)))
    }

    /// `e` is a zero-epi iff `coker(e) = 0`.
    fn is_zero_epi(&self, f: &Self::Morphism) -> bool {
        self.is_zero_object(&self.target(&self.cokernel(f)))
    }

    /// Dagger mono, and `ker(coker(f))† ∘ f` is a dagger iso. Equality as
    /// subobjects alone is too weak: in Rel the total relation `1 -> 2` is a
    /// dagger mono with the same cokernel as `id_2`.
    fn is_kernel(&self, f: &Self::Morphism) -> bool {
        if !self.is_dagger_mono(f) {
            return false;
        }
        let m = KernelSub::from_kernel(f.clone());
        let back = self.normalize(&m);
        if !self.subobject_eq(&m, &back).unwrap_or(false) {
            return false;
        }
        self.compose(&self.dagger(&back.mor), f)
            .is_ok_and(|phi| self.is_dagger_iso(&phi))
    }

    fn is_cokernel(&self, f: &Self::Morphism) -> bool {
        self.is_kernel(&self.dagger(f))
    }

    fn classify(&self, f: &Self::Morphism) -> Classification {
        Classification {
            is_zero: self.is_zero(f),
            is_dagger_mono: self.is_dagger_mono(f),
            is_dagger_epi: self.is_dagger_epi(f),
            is_zero_mono: self.is_zero_mono(f),
            is_zero_epi: self.is_zero_epi(f),
            is_kernel: self.is_kernel(f),
            is_cokernel: self.is_cokernel(f),
        }
    }

    /// `i_f = ker(coker(f))`, `e_f = (i_f)† ∘ f`.
    fn image_factorise(&self, f: &Self::Morphism) -> ImageFactorisation<Self::Morphism> {
        let image = self.kernel(&self.cokernel(f));
        let zero_epi = self
            .compose(&self.dagger(&image), f)
            .expect("image codomain equals target of f");
        ImageFactorisation {
            zero_epi,
            image: KernelSub::from_kernel(image),
        }
    }

    fn image(&self, f: &Self::Morphism) -> KernelSub<Self::Morphism> {
        KernelSub::from_kernel(self.kernel(&self.cokernel(f)))
    }

    fn full_factorise(&self, f: &Self::Morphism) -> Factorisation<Self::Morphism> {
        let image = self.image(f).mor;
        let coimage = self.dagger(&self.image(&self.dagger(f)).mor);
        let middle = self
            .compose(&self.dagger(&image), f)
            .and_then(|g| self.compose(&g, &self.dagger(&coimage)))
            .expect("factorisation parts are composable");
        let zero_epi_part = self
            .compose(&middle, &coimage)
            .expect("middle follows coimage");
        Factorisation {
            coimage,
            middle,
            image,
            zero_epi_part,
        }
    }

    /// `Dom(f) = ker(f)⊥`.
    fn domain_of(&self, f: &Self::Morphism) -> KernelSub<Self::Morphism> {
        self.ortho(&self.kernel_sub(f))
    }

    /// Diagonal for a commuting square `m ∘ f = g ∘ e` with `e` a zero-epi and
    /// `m` a kernel. Returns `d = m† ∘ g` after checking `d ∘ e = f` and
    /// `m ∘ d = g`.
    fn diagonal_fill_in(
        &self,
        e: &Self::Morphism,
        m: &KernelSub<Self::Morphism>,
        f: &Self::Morphism,
        g: &Self::Morphism,
    ) -> Result<Self::Morphism> {
        if !self.is_zero_epi(e) {
            return Err(Error::NotZeroEpi);
        }
        if !self.is_kernel(&m.mor) {
            return Err(Error::NotKernel);
        }
        let left = self.compose(&m.mor, f)?;
        let right = self.compose(g, e)?;
        if !self.mor_eq(&left, &right) {
            return Err(Error::NotCommuting);
        }
        let d = self.compose(&self.dagger(&m.mor), g)?;
        if !self.mor_eq(&self.compose(&d, e)?, f) || !self.mor_eq(&self.compose(&m.mor, &d)?, g) {
            return Err(Error::NotCommuting);
        }
        Ok(d)
    }

    /// The effect `⌈m⌉ = m ∘ m†`.
    fn effect_endo(&self, m: &KernelSub<Self::Morphism>) -> Self::Morphism {
        self.compose(&m.mor, &self.dagger(&m.mor))
            .expect("m and m† are composable")
    }
}

impl<C: DaggerKernelCategory + ?Sized> KernelOps for C {}
