//! The dagger kernel category interface.
//!
//! An instance supplies objects, morphisms, composition, the dagger, a zero
//! object and a chosen dagger-monic kernel for every morphism. Everything else
//! (cokernels, orthocomplements, pullbacks of kernels, factorisations, the
//! subobject order) is derived once in [`crate::dagcat`].

use std::fmt::Debug;

use crate::error::Result;

/// A dagger category with a zero object and dagger-monic kernels.
pub trait DaggerKernelCategory {
    type Object: Clone + PartialEq + Debug;
    type Morphism: Clone + Debug;

    /// Short identifier used in reports (`finrel`, `fdhilb`, ...).
    fn name(&self) -> &'static str;

    fn source(&self, f: &Self::Morphism) -> Self::Object;
    fn target(&self, f: &Self::Morphism) -> Self::Object;

    fn identity(&self, x: &Self::Object) -> Self::Morphism;

    fn zero_object(&self) -> Self::Object;
    fn is_zero_object(&self, x: &Self::Object) -> bool;

    /// The zero map `X -> 0 -> Y`.
    fn zero_morphism(&self, x: &Self::Object, y: &Self::Object) -> Self::Morphism;

    /// `g ∘ f`. Fails when `f`'s target is not `g`'s source.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;

    fn dagger(&self, f: &Self::Morphism) -> Self::Morphism;

    /// The chosen kernel of `f`, in the instance's canonical form. Always a
    /// dagger mono with codomain `source(f)`.
    fn kernel(&self, f: &Self::Morphism) -> Self::Morphism;

    /// Equality of parallel morphisms (exact, or within the law tolerance for
    /// numeric instances). Morphisms with different source or target are never
    /// equal.
    fn mor_eq(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool;

    fn is_zero(&self, f: &Self::Morphism) -> bool {
        let z = self.zero_morphism(&self.source(f), &self.target(f));
        self.mor_eq(f, &z)
    }

    fn is_identity(&self, f: &Self::Morphism) -> bool {
        let x = self.source(f);
        x == self.target(f) && self.mor_eq(f, &self.identity(&x))
    }
}

/// Instances whose homsets and kernel posets are finite and can be listed.
pub trait Enumerable: DaggerKernelCategory {
    /// Cardinality of an object (number of points, or atoms below it).
    fn object_size(&self, x: &Self::Object) -> usize;

    /// One representative object of every size `0..=max`, in increasing size.
    fn objects_up_to(&self, max: usize) -> Vec<Self::Object>;

    /// The objects a law sweep visits at size `max`. Defaults to one object
    /// per size.
    fn sweep_objects(&self, max: usize) -> Vec<Self::Object> {
        self.objects_up_to(max)
    }

    fn homset_size(&self, x: &Self::Object, y: &Self::Object) -> u128;

    /// Every morphism `x -> y`, in a deterministic order. Fails if the homset
    /// has more than `cap` elements.
    fn enumerate_homset(
        &self,
        x: &Self::Object,
        y: &Self::Object,
        cap: u128,
    ) -> Result<Vec<Self::Morphism>>;

    /// Canonical representatives of every element of `KSub(x)`.
    fn kernels_into(&self, x: &Self::Object) -> Vec<Self::Morphism>;
}

/// Default enumeration guard.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

/// Instances with infinite homsets that can be sampled instead.
pub trait Sampleable: DaggerKernelCategory {
    fn sample_morphism<R: rand::Rng + ?Sized>(
        &self,
        x: &Self::Object,
        y: &Self::Object,
        rng: &mut R,
    ) -> Self::Morphism;
}

/// A kernel subobject `m: M ↣ X`, held through a dagger-monic kernel
/// representative. The codomain is `target(mor)`.
#[derive(Debug, Clone)]
pub struct KernelSub<M> {
    pub mor: M,
}

impl<M: Clone + Debug> KernelSub<M> {
    /// Wraps a morphism already known to be a dagger-monic kernel.
    pub fn from_kernel(mor: M) -> Self {
        KernelSub { mor }
    }

    pub fn codomain<C>(&self, cat: &C) -> C::Object
    where
        C: DaggerKernelCategory<Morphism = M>,
    {
        cat.target(&self.mor)
    }

    pub fn domain<C>(&self, cat: &C) -> C::Object
    where
        C: DaggerKernelCategory<Morphism = M>,
    {
        cat.source(&self.mor)
    }
}
