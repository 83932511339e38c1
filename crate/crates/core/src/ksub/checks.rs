//! Law checks over finite kernel lattices and the quantifiers between them.
//!
//! Every check returns the first counterexample found, with the morphisms
//! involved, so a failure can be replayed.

use crate::category::{DaggerKernelCategory, KernelSub};
use crate::dagcat::KernelOps;
use crate::error::Error;
use crate::ksub::lattice::KSubLattice;
use crate::ksub::ops::LogicOps;

/// A counterexample: a description and the named morphisms involved.
#[derive(Debug, Clone)]
pub struct Witness<M> {
    pub note: String,
    pub parts: Vec<(String, M)>,
}

pub type Check<M> = Result<(), Witness<M>>;

fn fail<M: Clone>(note: impl Into<String>, parts: &[(&str, &M)]) -> Witness<M> {
    Witness {
        note: note.into(),
        parts: parts.iter().map(|(n, m)| (n.to_string(), (*m).clone())).collect(),
    }
}

fn errored<M>(e: Error) -> Witness<M> {
    Witness {
        note: format!("operation failed: {e}"),
        parts: Vec::new(),
    }
}

type Lat<C> = KSubLattice<C>;

fn el<C: DaggerKernelCategory>(l: &Lat<C>, i: usize) -> &C::Morphism {
    &l.elements[i].mor
}

/// `⊥` is an order-reversing involution with `m ∧ m⊥ = 0` and `m ∨ m⊥ = 1`.
pub fn check_ortho<C: DaggerKernelCategory>(l: &Lat<C>) -> Check<C::Morphism> {
    let n = l.len();
    for i in 0..n {
        let o = l.ortho[i];
        if l.ortho[o] != i {
            return Err(fail("m⊥⊥ ≠ m", &[("m", el(l, i))]));
        }
        if l.meet[i][o] != l.bottom || l.join[i][o] != l.top {
            return Err(fail("m⊥ is not a complement of m", &[("m", el(l, i))]));
        }
        for j in 0..n {
            if l.leq[i][j] != l.leq[l.ortho[j]][o] {
                return Err(fail(
                    "m ≤ n does not match n⊥ ≤ m⊥",
                    &[("m", el(l, i)), ("n", el(l, j))],
                ));
            }
        }
    }
    Ok(())
}

/// `m ≤ n ⇒ m ∨ (m⊥ ∧ n) = n`.
pub fn check_orthomodular<C: DaggerKernelCategory>(l: &Lat<C>) -> Check<C::Morphism> {
    for m in 0..l.len() {
        for n in 0..l.len() {
            if l.leq[m][n] && l.join[m][l.meet[l.ortho[m]][n]] != n {
                return Err(fail(
                    "m ∨ (m⊥ ∧ n) ≠ n for m ≤ n",
                    &[("m", el(l, m)), ("n", el(l, n))],
                ));
            }
        }
    }
    Ok(())
}

/// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
pub fn check_distributive<C: DaggerKernelCategory>(l: &Lat<C>) -> Check<C::Morphism> {
    let n = l.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = l.meet[a][l.join[b][c]];
                let rhs = l.join[l.meet[a][b]][l.meet[a][c]];
                if lhs != rhs {
                    return Err(fail(
                        "a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)",
                        &[
                            ("a", el(l, a)),
                            ("b", el(l, b)),
                            ("c", el(l, c)),
                            ("lhs", el(l, lhs)),
                            ("rhs", el(l, rhs)),
                        ],
                    ));
                }
            }
        }
    }
    Ok(())
}

/// `(m ∨ n)⊥ = m⊥ ∧ n⊥` and `(m ∧ n)⊥ = m⊥ ∨ n⊥`.
pub fn check_de_morgan<C: DaggerKernelCategory>(l: &Lat<C>) -> Check<C::Morphism> {
    let o = &l.ortho;
    for m in 0..l.len() {
        for n in 0..l.len() {
            if o[l.join[m][n]] != l.meet[o[m]][o[n]] || o[l.meet[m][n]] != l.join[o[m]][o[n]] {
                return Err(fail("De Morgan fails", &[("m", el(l, m)), ("n", el(l, n))]));
            }
        }
    }
    Ok(())
}

/// Booleanness: `m ∧ n = 0 ⇒ m† ∘ n = 0`.
pub fn check_boolean<C: KernelOps>(cat: &C, l: &Lat<C>) -> Check<C::Morphism> {
    for m in 0..l.len() {
        for n in 0..l.len() {
            if l.meet[m][n] != l.bottom {
                continue;
            }
            let c = cat
                .compose(&cat.dagger(el(l, m)), el(l, n))
                .map_err(errored)?;
            if !cat.is_zero(&c) {
                return Err(fail(
                    "m ∧ n = 0 but m† ∘ n ≠ 0",
                    &[("m", el(l, m)), ("n", el(l, n)), ("m† ∘ n", &c)],
                ));
            }
        }
    }
    Ok(())
}

/// For the pullback `q = m⁻¹(n)` with top edge `p`: `n† ∘ m = p ∘ q†`.
pub fn check_strengthened_boolean<C: KernelOps>(cat: &C, l: &Lat<C>) -> Check<C::Morphism> {
    for m in 0..l.len() {
        for n in 0..l.len() {
            let (mm, nn) = (&l.elements[m], &l.elements[n]);
            let pb = cat.pullback_kernel(&mm.mor, nn).map_err(errored)?;
            let lhs = cat.compose(&cat.dagger(&nn.mor), &mm.mor).map_err(errored)?;
            let rhs = cat.compose(&pb.top, &cat.dagger(&pb.sub.mor)).map_err(errored)?;
            if !cat.mor_eq(&lhs, &rhs) {
                return Err(fail(
                    "n† ∘ m ≠ p ∘ q†",
                    &[("m", &mm.mor), ("n", &nn.mor), ("n† ∘ m", &lhs), ("p ∘ q†", &rhs)],
                ));
            }
        }
    }
    Ok(())
}

/// `m ∧ k ≤ l ⇔ m ≤ (k ⇒ l)` with `k ⇒ l = k⊥ ∨ (k ∧ l)`.
pub fn check_heyting<C: DaggerKernelCategory>(l: &Lat<C>) -> Check<C::Morphism> {
    let n = l.len();
    for k in 0..n {
        for t in 0..n {
            let imp = l.join[l.ortho[k]][l.meet[k][t]];
            for m in 0..n {
                if l.leq[l.meet[m][k]][t] != l.leq[m][imp] {
                    return Err(fail(
                        "m ∧ k ≤ l does not match m ≤ (k ⇒ l)",
                        &[("m", el(l, m)), ("k", el(l, k)), ("l", el(l, t))],
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Both forms of `⊃` and `&` agree, and `k & m ≤ n ⇔ k ≤ m ⊃ n`.
pub fn check_sasaki<C: KernelOps>(cat: &C, l: &Lat<C>) -> Check<C::Morphism> {
    let n = l.len();
    let idx = |s: &KernelSub<C::Morphism>| l.index_of(cat, s);
    let mut hook = vec![vec![0; n]; n];
    let mut and_then = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (&l.elements[a], &l.elements[b]);
            let h1 = cat.sasaki_hook(x, y).map_err(errored)?;
            let h2 = cat.sasaki_hook_formula(x, y).map_err(errored)?;
            if !cat.subobject_eq(&h1, &h2).map_err(errored)? {
                return Err(fail(
                    "⌈m⌉⁻¹(n) ≠ m⊥ ∨ (m ∧ n)",
                    &[("m", &x.mor), ("n", &y.mor), ("pullback", &h1.mor), ("formula", &h2.mor)],
                ));
            }
            let t1 = cat.and_then(x, y).map_err(errored)?;
            let t2 = cat.and_then_formula(x, y).map_err(errored)?;
            if !cat.subobject_eq(&t1, &t2).map_err(errored)? {
                return Err(fail(
                    "∃_⌈m⌉(k) ≠ m ∧ (m⊥ ∨ k)",
                    &[("k", &x.mor), ("m", &y.mor), ("image", &t1.mor), ("formula", &t2.mor)],
                ));
            }
            hook[a][b] = idx(&h1).ok_or_else(|| fail("⊃ leaves the lattice", &[("m", &x.mor), ("n", &y.mor)]))?;
            and_then[a][b] = idx(&t1).ok_or_else(|| fail("& leaves the lattice", &[("k", &x.mor), ("m", &y.mor)]))?;
        }
    }
    for k in 0..n {
        for m in 0..n {
            for t in 0..n {
                if l.leq[and_then[k][m]][t] != l.leq[k][hook[m][t]] {
                    return Err(fail(
                        "k & m ≤ n does not match k ≤ m ⊃ n",
                        &[("k", el(l, k)), ("m", el(l, m)), ("n", el(l, t))],
                    ));
                }
            }
        }
    }
    Ok(())
}

/// For `f: X -> Y`: both `∃_f` formulas agree, `∃_f(m) ≤ n ⇔ m ≤ f⁻¹(n)`,
/// `f⁻¹` preserves `1` and `∧`, and the transposed square condition
/// `m ≤ f⁻¹(n) ⇔ n⊥ ≤ (f†)⁻¹(m⊥)` holds.
pub fn check_adjunction<C: KernelOps>(
    cat: &C,
    f: &C::Morphism,
    lx: &Lat<C>,
    ly: &Lat<C>,
) -> Check<C::Morphism> {
    let fd = cat.dagger(f);
    let mut pre = Vec::with_capacity(ly.len());
    for n in &ly.elements {
        pre.push(cat.pullback_sub(f, n).map_err(errored)?);
    }
    if !cat.is_identity(&pre[ly.top].mor) {
        return Err(fail("f⁻¹(1) ≠ 1", &[("f", f)]));
    }
    for a in 0..ly.len() {
        for b in 0..ly.len() {
            let lhs = cat.pullback_sub(f, &ly.elements[ly.meet[a][b]]).map_err(errored)?;
            let rhs = cat.meet(&pre[a], &pre[b]).map_err(errored)?;
            if !cat.subobject_eq(&lhs, &rhs).map_err(errored)? {
                return Err(fail(
                    "f⁻¹(m ∧ n) ≠ f⁻¹(m) ∧ f⁻¹(n)",
                    &[("f", f), ("m", el(ly, a)), ("n", el(ly, b))],
                ));
            }
        }
    }
    for m in &lx.elements {
        let e1 = cat.exists_along(f, m).map_err(errored)?;
        let e2 = cat.exists_alt(f, m).map_err(errored)?;
        if !cat.subobject_eq(&e1, &e2).map_err(errored)? {
            return Err(fail(
                "image(f ∘ m) ≠ ((f†)⁻¹(m⊥))⊥",
                &[("f", f), ("m", &m.mor), ("image", &e1.mor), ("alternative", &e2.mor)],
            ));
        }
        let mo = cat.ortho(m);
        let back = cat.pullback_sub(&fd, &mo).map_err(errored)?;
        for (j, n) in ly.elements.iter().enumerate() {
            let left = cat.subobject_leq(&e1, n).map_err(errored)?;
            let right = cat.subobject_leq(m, &pre[j]).map_err(errored)?;
            if left != right {
                return Err(fail(
                    "∃_f(m) ≤ n does not match m ≤ f⁻¹(n)",
                    &[("f", f), ("m", &m.mor), ("n", &n.mor)],
                ));
            }
            let transposed = cat.subobject_leq(&cat.ortho(n), &back).map_err(errored)?;
            if right != transposed {
                return Err(fail(
                    "m ≤ f⁻¹(n) does not match n⊥ ≤ (f†)⁻¹(m⊥)",
                    &[("f", f), ("m", &m.mor), ("n", &n.mor)],
                ));
            }
        }
    }
    Ok(())
}

/// For `f: X -> Z`, a kernel `g: Y ↣ Z`, `p = f⁻¹(g)` and top edge `q`:
/// `f⁻¹(∃_g k) = ∃_p(q⁻¹ k)` for every `k` in `ly ⊆ KSub(Y)`.
pub fn check_beck_chevalley<C: KernelOps>(
    cat: &C,
    f: &C::Morphism,
    g: &KernelSub<C::Morphism>,
    ly: &Lat<C>,
) -> Check<C::Morphism> {
    if !cat.is_kernel(&g.mor) {
        return Err(fail("g is not a kernel", &[("g", &g.mor)]));
    }
    let pb = cat.pullback_kernel(f, g).map_err(errored)?;
    for k in &ly.elements {
        let lhs = cat
            .exists_along(&g.mor, k)
            .and_then(|e| cat.pullback_sub(f, &e))
            .map_err(errored)?;
        let rhs = cat
            .pullback_sub(&pb.top, k)
            .and_then(|e| cat.exists_along(&pb.sub.mor, &e))
            .map_err(errored)?;
        if !cat.subobject_eq(&lhs, &rhs).map_err(errored)? {
            return Err(fail(
                "f⁻¹(∃_g k) ≠ ∃_p(q⁻¹ k)",
                &[("f", f), ("g", &g.mor), ("k", &k.mor), ("lhs", &lhs.mor), ("rhs", &rhs.mor)],
            ));
        }
    }
    Ok(())
}

/// `⌈m⌉ ∘ m = m`, `⌈m⌉ ∘ m⊥ = 0`, `⌈−⌉` round-trips with the image, and
/// `⌈1⌉ = id`, `⌈0⌉ = 0`.
pub fn check_effects<C: KernelOps>(cat: &C, l: &Lat<C>) -> Check<C::Morphism> {
    for m in &l.elements {
        let e = cat.effect_of(m);
        if !cat.is_effect(&e) {
            return Err(fail("⌈m⌉ is not a self-adjoint idempotent", &[("m", &m.mor), ("⌈m⌉", &e)]));
        }
        let em = cat.compose(&e, &m.mor).map_err(errored)?;
        let eo = cat.compose(&e, &cat.ortho(m).mor).map_err(errored)?;
        if !cat.mor_eq(&em, &m.mor) || !cat.is_zero(&eo) {
            return Err(fail("⌈m⌉ ∘ m ≠ m or ⌈m⌉ ∘ m⊥ ≠ 0", &[("m", &m.mor), ("⌈m⌉", &e)]));
        }
        let back = cat.effect_to_kernel(&e).map_err(errored)?;
        if !cat.subobject_eq(&back, m).map_err(errored)? || !cat.mor_eq(&cat.effect_of(&back), &e) {
            return Err(fail("effect round trip fails", &[("m", &m.mor), ("⌈m⌉", &e)]));
        }
    }
    if !cat.is_identity(&cat.effect_of(&l.elements[l.top]))
        || !cat.is_zero(&cat.effect_of(&l.elements[l.bottom]))
    {
        return Err(fail("⌈1⌉ ≠ id or ⌈0⌉ ≠ 0", &[]));
    }
    Ok(())
}
