//! The partial order on homsets defined through four-way factorisations.
//!
//! `f ≤ g` when the forced candidates `φ = (i_g)† ∘ i_f` and
//! `ψ = (i_{g†})† ∘ i_{f†}` satisfy
//! `ψ† ∘ (i_{g†})† = (i_{f†})†`, `φ ∘ m_f = m_g ∘ ψ`, `φ† ∘ m_g = m_f ∘ ψ†`
//! and `i_g ∘ φ = i_f`.

use serde::Serialize;

use crate::dagcat::{Factorisation, KernelOps};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct OrderWitness<M> {
    /// `Im(f) -> Im(g)`.
    pub phi: M,
    /// `Im(f†) -> Im(g†)`.
    pub psi: M,
}

/// Outcome of the preservation checks for `f ≤ g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Preservation {
    /// `k ∘ f ≤ k ∘ g`.
    pub post_kernel: bool,
    /// `f ∘ c ≤ g ∘ c`.
    pub pre_cokernel: bool,
    /// `f† ≤ g†`.
    pub dagger: bool,
}

impl Preservation {
    pub fn all(&self) -> bool {
        self.post_kernel && self.pre_cokernel && self.dagger
    }
}

/// The witness for `f ≤ g`, or `None` when `f ≰ g`.
pub fn homset_leq<C: KernelOps>(
    cat: &C,
    f: &C::Morphism,
    g: &C::Morphism,
) -> Result<Option<OrderWitness<C::Morphism>>> {
    if cat.source(f) != cat.source(g) || cat.target(f) != cat.target(g) {
        return Err(Error::NotParallel);
    }
    leq_from_factorisations(cat, &cat.full_factorise(f), &cat.full_factorise(g))
}

/// [`homset_leq`] on precomputed factorisations of parallel maps.
pub fn leq_from_factorisations<C: KernelOps>(
    cat: &C,
    ff: &Factorisation<C::Morphism>,
    fg: &Factorisation<C::Morphism>,
) -> Result<Option<OrderWitness<C::Morphism>>> {
    let phi = cat.compose(&cat.dagger(&fg.image), &ff.image)?;
    let psi = cat.compose(&fg.coimage, &cat.dagger(&ff.coimage))?;
    let (phid, psid) = (cat.dagger(&phi), cat.dagger(&psi));
    let holds = cat.mor_eq(&cat.compose(&psid, &fg.coimage)?, &ff.coimage)
        && cat.mor_eq(
            &cat.compose(&phi, &ff.middle)?,
            &cat.compose(&fg.middle, &psi)?,
        )
        && cat.mor_eq(
            &cat.compose(&phid, &fg.middle)?,
            &cat.compose(&ff.middle, &psid)?,
        )
        && cat.mor_eq(&cat.compose(&fg.image, &phi)?, &ff.image);
    Ok(holds.then_some(OrderWitness { phi, psi }))
}

pub fn is_leq<C: KernelOps>(cat: &C, f: &C::Morphism, g: &C::Morphism) -> Result<bool> {
    Ok(homset_leq(cat, f, g)?.is_some())
}

/// For `f ≤ g`, a kernel `k` out of their target and a cokernel `c` into
/// their source, reports whether `k ∘ f ≤ k ∘ g`, `f ∘ c ≤ g ∘ c` and
/// `f† ≤ g†`.
pub fn check_order_preservation<C: KernelOps>(
    cat: &C,
    f: &C::Morphism,
    g: &C::Morphism,
    k: &C::Morphism,
    c: &C::Morphism,
) -> Result<Preservation> {
    if !is_leq(cat, f, g)? {
        return Err(Error::Precondition("f ≰ g".into()));
    }
    if !cat.is_kernel(k) {
        return Err(Error::NotKernel);
    }
    if !cat.is_cokernel(c) {
        return Err(Error::NotCokernel);
    }
    Ok(Preservation {
        post_kernel: is_leq(cat, &cat.compose(k, f)?, &cat.compose(k, g)?)?,
        pre_cokernel: is_leq(cat, &cat.compose(f, c)?, &cat.compose(g, c)?)?,
        dagger: is_leq(cat, &cat.dagger(f), &cat.dagger(g))?,
    })
}
