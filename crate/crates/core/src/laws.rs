//! Law suites over swept objects and homsets, with JSON reports.
//!
//! A [`Sweep`] fixes the objects visited and a homset for every ordered pair
//! of them: all morphisms for enumerable instances, seeded samples (plus the
//! zero map and the identity) otherwise. Each suite returns one [`LawCheck`]
//! per law and object, carrying the first counterexample found.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{DaggerKernelCategory, Enumerable, KernelSub, Sampleable};
use crate::dagcat::KernelOps;
use crate::error::{Error, Result};
use crate::io::JsonPayload;
use crate::instances::{Dim, FdHilb, LinearMap};
use crate::kck::Kck;
use crate::ksub::checks::{self, Check, Witness};
use crate::ksub::lattice::KSubLattice;
use crate::ksub::ops::LogicOps;
use crate::order::{is_leq, leq_from_factorisations};

/// Law families selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Law {
    Axioms,
    Factor,
    Omod,
    Bool,
    Dist,
    Sasaki,
    Adjoint,
    Bc,
    Order,
    Effect,
    Atoms,
    Kck,
}

impl Law {
    pub const ALL: [Law; 12] = [
        Law::Axioms,
        Law::Factor,
        Law::Omod,
        Law::Bool,
        Law::Dist,
        Law::Sasaki,
        Law::Adjoint,
        Law::Bc,
        Law::Order,
        Law::Effect,
        Law::Atoms,
        Law::Kck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Axioms => "axioms",
            Law::Factor => "factor",
            Law::Omod => "omod",
            Law::Bool => "bool",
            Law::Dist => "dist",
            Law::Sasaki => "sasaki",
            Law::Adjoint => "adjoint",
            Law::Bc => "bc",
            Law::Order => "order",
            Law::Effect => "effect",
            Law::Atoms => "atoms",
            Law::Kck => "kck",
        }
    }

    /// Parses `all` or a comma-separated list of law names.
    pub fn parse_list(s: &str) -> Result<Vec<Law>> {
        if s.trim() == "all" {
            return Ok(Law::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let law = Law::ALL
                .into_iter()
                .find(|l| l.name() == part)
                .ok_or_else(|| Error::Precondition(format!("unknown law {part}")))?;
            if !out.contains(&law) {
                out.push(law);
            }
        }
        if out.is_empty() {
            return Err(Error::Precondition("no laws selected".into()));
        }
        Ok(out)
    }
}

/// One line of a report.
#[derive(Debug, Clone, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub instance: String,
    pub object: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

pub fn witness_json<C: JsonPayload>(cat: &C, w: &Witness<C::Morphism>) -> Value {
    let parts: Vec<Value> = w
        .parts
        .iter()
        .map(|(name, m)| json!({"name": name, "morphism": cat.morphism_json(m)}))
        .collect();
    json!({"note": w.note, "morphisms": parts})
}

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

type HomFn<'a, C> = Box<
    dyn FnMut(
            &<C as DaggerKernelCategory>::Object,
            &<C as DaggerKernelCategory>::Object,
        ) -> Result<Vec<<C as DaggerKernelCategory>::Morphism>>
        + 'a,
>;

/// The objects and homsets a suite visits.
pub struct Sweep<'a, C: DaggerKernelCategory> {
    pub objects: Vec<C::Object>,
    /// Whether homsets are complete rather than sampled.
    pub exhaustive: bool,
    homs: Vec<Vec<Vec<C::Morphism>>>,
    fresh: HomFn<'a, C>,
}

impl<'a, C: DaggerKernelCategory> Sweep<'a, C> {
    fn build(objects: Vec<C::Object>, exhaustive: bool, mut fresh: HomFn<'a, C>) -> Result<Self> {
        let mut homs = Vec::with_capacity(objects.len());
        for x in &objects {
            let row = objects
                .iter()
                .map(|y| fresh(x, y))
                .collect::<Result<Vec<_>>>()?;
            homs.push(row);
        }
        Ok(Sweep {
            objects,
            exhaustive,
            homs,
            fresh,
        })
    }

    /// Complete homsets, each guarded by `cap`.
    pub fn enumerated(cat: &'a C, objects: Vec<C::Object>, cap: u128) -> Result<Self>
    where
        C: Enumerable,
    {
        Sweep::build(
            objects,
            true,
            Box::new(move |x, y| cat.enumerate_homset(x, y, cap)),
        )
    }

    /// `samples` seeded random morphisms per homset, plus `0` and, on
    /// endomorphism homsets, the identity.
    pub fn sampled(cat: &'a C, objects: Vec<C::Object>, samples: usize, seed: u64) -> Result<Self>
    where
        C: Sampleable,
    {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Sweep::build(
            objects,
            false,
            Box::new(move |x, y| {
                let mut out = vec![cat.zero_morphism(x, y)];
                if x == y {
                    out.push(cat.identity(x));
                }
                out.extend((0..samples).map(|_| cat.sample_morphism(x, y, &mut rng)));
                Ok(out)
            }),
        )
    }

    pub fn hom(&self, i: usize, j: usize) -> &[C::Morphism] {
        &self.homs[i][j]
    }

    /// A homset between arbitrary objects, built on demand.
    pub fn fresh(&mut self, x: &C::Object, y: &C::Object) -> Result<Vec<C::Morphism>> {
        (self.fresh)(x, y)
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }
}

/// Probe maps per homset used by the quadratic checks in sampled sweeps.
const SAMPLED_PROBES: usize = 8;

type LatticeFn<'a, C> =
    Box<dyn FnMut(&<C as DaggerKernelCategory>::Object) -> Result<KSubLattice<C>> + 'a>;

/// Everything a suite needs: the category, the sweep, one lattice per swept
/// object, and the indices of the small objects used as probe domains.
pub struct Context<'a, C: DaggerKernelCategory> {
    pub cat: &'a C,
    pub sweep: Sweep<'a, C>,
    pub lattices: Vec<KSubLattice<C>>,
    /// Sweep indices of the objects used as universality and probe domains.
    pub small: Vec<usize>,
    /// Homsets larger than this are skipped by the order suite.
    pub order_cap: usize,
    /// Number of diagonal fill-in squares built per instance.
    pub squares: usize,
    lattice_of: LatticeFn<'a, C>,
}

impl<'a, C: KernelOps + JsonPayload> Context<'a, C> {
    pub fn new(
        cat: &'a C,
        sweep: Sweep<'a, C>,
        small: Vec<usize>,
        mut lattice_of: LatticeFn<'a, C>,
    ) -> Result<Self> {
        let lattices = sweep
            .objects
            .iter()
            .map(&mut lattice_of)
            .collect::<Result<Vec<_>>>()?;
        Ok(Context {
            cat,
            sweep,
            lattices,
            small,
            order_cap: 64,
            squares: 100,
            lattice_of,
        })
    }

    /// An enumerable context over `cat.sweep_objects(max_size)`; objects of
    /// size at most 2 are the probe domains.
    pub fn enumerable(cat: &'a C, max_size: usize, cap: u128) -> Result<Self>
    where
        C: Enumerable,
    {
        let objects = cat.sweep_objects(max_size);
        let small = (0..objects.len())
            .filter(|&i| cat.object_size(&objects[i]) <= 2)
            .collect();
        let sweep = Sweep::enumerated(cat, objects, cap)?;
        Context::new(cat, sweep, small, Box::new(move |x| KSubLattice::build(cat, x)))
    }

    /// A sampled context over `objects`; the first `small` objects are the
    /// probe domains and `lattice_of` supplies the finite sublattices.
    pub fn sampled(
        cat: &'a C,
        objects: Vec<C::Object>,
        small: usize,
        samples: usize,
        seed: u64,
        lattice_of: LatticeFn<'a, C>,
    ) -> Result<Self>
    where
        C: Sampleable,
    {
        let small = (0..small.min(objects.len())).collect();
        let sweep = Sweep::sampled(cat, objects, samples, seed)?;
        Context::new(cat, sweep, small, lattice_of)
    }

    pub fn lattice_for(&mut self, x: &C::Object) -> Result<KSubLattice<C>> {
        if let Some(i) = self.sweep.objects.iter().position(|o| o == x) {
            return Ok(self.lattices[i].clone());
        }
        (self.lattice_of)(x)
    }

    fn label(&self, x: &C::Object) -> String {
        self.cat.object_json(x).to_string()
    }

    fn line(&self, law: Law, i: usize, result: Check<C::Morphism>) -> LawCheck {
        LawCheck {
            law: law.name().into(),
            instance: self.cat.name().into(),
            object: self.label(&self.sweep.objects[i]),
            pass: result.is_ok(),
            witness: result.err().map(|w| witness_json(self.cat, &w)),
        }
    }

    /// Runs the requested families, skipping those that need structure the
    /// instance lacks (`kck` is run separately). Lines are sorted by object,
    /// then law.
    pub fn run(&mut self, laws: &[Law]) -> Vec<LawCheck> {
        let mut out = Vec::new();
        for &law in laws {
            for i in 0..self.sweep.len() {
                let r = match law {
                    Law::Axioms => self.axioms(i),
                    Law::Factor => self.factorisation(i),
                    Law::Omod => self.omod(i),
                    Law::Bool => self.boolean(i),
                    Law::Dist => checks::check_distributive(&self.lattices[i]),
                    Law::Sasaki => checks::check_sasaki(self.cat, &self.lattices[i]),
                    Law::Adjoint => self.adjoint(i),
                    Law::Bc => self.beck_chevalley(i),
                    Law::Order => self.order(i),
                    Law::Effect => self.effects(i),
                    Law::Atoms => self.atoms(i),
                    Law::Kck => continue,
                };
                out.push(self.line(law, i, r));
            }
        }
        sort_report(&mut out);
        out
    }

    /// Dagger involution and contravariance, identity and zero laws, and
    /// kernels: dagger monic, `f ∘ ker f = 0`, `ker(coker(ker f)) = ker f`,
    /// universal and (when exhaustive) uniquely so, for every `f` out of
    /// object `i`.
    pub fn axioms(&mut self, i: usize) -> Check<C::Morphism> {
        let cat = self.cat;
        let x = self.sweep.objects[i].clone();
        let id = cat.identity(&x);
        if !cat.mor_eq(&cat.dagger(&id), &id) {
            return Err(fail("id† ≠ id", &[("id", &id)]));
        }
        let z = cat.zero_object();
        let through_zero = cat
            .compose(&cat.zero_morphism(&z, &x), &cat.zero_morphism(&x, &z))
            .map_err(errored)?;
        if !cat.is_zero(&through_zero) || !cat.is_zero(&cat.identity(&z)) {
            return Err(fail("zero object laws fail", &[("X -> 0 -> X", &through_zero)]));
        }
        if self.sweep.exhaustive {
            let to = self.sweep.fresh(&x, &z).map_err(errored)?;
            let from = self.sweep.fresh(&z, &x).map_err(errored)?;
            if to.len() != 1 || from.len() != 1 {
                return Err(fail("0 is not a zero object", &[]));
            }
        }
        for j in 0..self.sweep.len() {
            let y = self.sweep.objects[j].clone();
            for f in self.sweep.hom(i, j).to_vec() {
                if cat.source(&f) != x || cat.target(&f) != y {
                    return Err(fail("homset element has the wrong type", &[("f", &f)]));
                }
                let fd = cat.dagger(&f);
                if cat.source(&fd) != y || !cat.mor_eq(&cat.dagger(&fd), &f) {
                    return Err(fail("f†† ≠ f", &[("f", &f)]));
                }
                let l = cat.compose(&cat.identity(&y), &f).map_err(errored)?;
                let r = cat.compose(&f, &id).map_err(errored)?;
                if !cat.mor_eq(&l, &f) || !cat.mor_eq(&r, &f) {
                    return Err(fail("identity law fails", &[("f", &f)]));
                }
                let k = cat.kernel(&f);
                if cat.target(&k) != x || !cat.is_dagger_mono(&k) {
                    return Err(fail("ker f is not a dagger mono into X", &[("f", &f), ("ker f", &k)]));
                }
                if !cat.is_zero(&cat.compose(&f, &k).map_err(errored)?) {
                    return Err(fail("f ∘ ker f ≠ 0", &[("f", &f), ("ker f", &k)]));
                }
                if !cat.is_kernel(&k) {
                    return Err(fail("ker(coker(ker f)) ≠ ker f", &[("f", &f), ("ker f", &k)]));
                }
                self.universality(&f, &k)?;
                for l in 0..self.sweep.len() {
                    let hs = self.sweep.hom(j, l);
                    let gs: Vec<C::Morphism> = if self.sweep.exhaustive {
                        hs.to_vec()
                    } else {
                        hs.iter().take(8).cloned().collect()
                    };
                    for g in gs {
                        let gf = cat.compose(&g, &f).map_err(errored)?;
                        let rhs = cat.compose(&fd, &cat.dagger(&g)).map_err(errored)?;
                        if !cat.mor_eq(&cat.dagger(&gf), &rhs) {
                            return Err(fail("(g ∘ f)† ≠ f† ∘ g†", &[("f", &f), ("g", &g)]));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Every `g: W -> X` with `f ∘ g = 0` factors as `k ∘ (k† ∘ g)`; when the
    /// sweep is exhaustive the factorisation is the only one.
    fn universality(&mut self, f: &C::Morphism, k: &C::Morphism) -> Check<C::Morphism> {
        let cat = self.cat;
        let kd = cat.dagger(k);
        let kobj = cat.source(k);
        let i = self
            .sweep
            .objects
            .iter()
            .position(|o| *o == cat.source(f))
            .expect("f starts at a swept object");
        for &w in &self.small.clone() {
            let wobj = self.sweep.objects[w].clone();
            let through_k = self.sweep.fresh(&wobj, &kobj).map_err(errored)?;
            let mut candidates: Vec<C::Morphism> = self.sweep.hom(w, i).to_vec();
            if !self.sweep.exhaustive {
                candidates.truncate(SAMPLED_PROBES);
                for h in through_k.iter().take(SAMPLED_PROBES) {
                    candidates.push(cat.compose(k, h).map_err(errored)?);
                }
            }
            for g in candidates {
                if !cat.is_zero(&cat.compose(f, &g).map_err(errored)?) {
                    continue;
                }
                let h = cat.compose(&kd, &g).map_err(errored)?;
                if !cat.mor_eq(&cat.compose(k, &h).map_err(errored)?, &g) {
                    return Err(fail("f ∘ g = 0 but g does not factor through ker f", &[("f", f), ("g", &g)]));
                }
                if self.sweep.exhaustive {
                    let mut count = 0;
                    for h2 in &through_k {
                        if cat.mor_eq(&cat.compose(k, h2).map_err(errored)?, &g) {
                            count += 1;
                        }
                    }
                    if count != 1 {
                        return Err(fail(
                            format!("{count} factorisations through ker f"),
                            &[("f", f), ("g", &g)],
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Image and four-way factorisations of every `f` out of object `i`, and
    /// diagonal fill-ins for squares built from them.
    pub fn factorisation(&mut self, i: usize) -> Check<C::Morphism> {
        let cat = self.cat;
        let per_object = self.squares.div_ceil(self.sweep.len().max(1));
        let mut squares = 0;
        for j in 0..self.sweep.len() {
            for f in self.sweep.hom(i, j).to_vec() {
                let im = cat.image_factorise(&f);
                let back = cat.compose(&im.image.mor, &im.zero_epi).map_err(errored)?;
                if !cat.mor_eq(&back, &f) {
                    return Err(fail("i_f ∘ e_f ≠ f", &[("f", &f)]));
                }
                if !cat.is_zero_epi(&im.zero_epi) || !cat.is_kernel(&im.image.mor) {
                    return Err(fail("e_f not zero-epi or i_f not a kernel", &[("f", &f)]));
                }
                if cat.is_zero_epi(&f) && !cat.subobject_eq(&im.image, &cat.top(&cat.target(&f))).map_err(errored)? {
                    return Err(fail("zero-epi with a proper image", &[("f", &f)]));
                }
                let fac = cat.full_factorise(&f);
                let whole = cat
                    .compose(&fac.middle, &fac.coimage)
                    .and_then(|mc| cat.compose(&fac.image, &mc))
                    .map_err(errored)?;
                if !cat.mor_eq(&whole, &f) {
                    return Err(fail("image ∘ middle ∘ coimage ≠ f", &[("f", &f)]));
                }
                if !cat.is_cokernel(&fac.coimage)
                    || !cat.is_kernel(&fac.image)
                    || !cat.is_zero_epi(&fac.middle)
                    || !cat.is_zero_mono(&fac.middle)
                {
                    return Err(fail("factorisation parts have the wrong classes", &[("f", &f), ("middle", &fac.middle)]));
                }
                let dual = cat.full_factorise(&cat.dagger(&f));
                if !cat.mor_eq(&cat.dagger(&fac.middle), &dual.middle) {
                    return Err(fail("(m_f)† ≠ m_{f†}", &[("f", &f)]));
                }
                if squares < per_object {
                    squares += self.fill_in_square(&f, &im.zero_epi)?;
                }
            }
        }
        Ok(())
    }

    /// For `e = e_f: X ↠ I` and each `h: I -> Z`, the square
    /// `i_h ∘ (e_h ∘ e) = h ∘ e` has diagonal `e_h`; checks it and, when
    /// exhaustive, that it is the only one.
    fn fill_in_square(&mut self, f: &C::Morphism, e: &C::Morphism) -> Result<usize, Witness<C::Morphism>> {
        let cat = self.cat;
        let iobj = cat.target(e);
        let mut built = 0;
        for l in 0..self.sweep.len() {
            let zobj = self.sweep.objects[l].clone();
            let hs = self.sweep.fresh(&iobj, &zobj).map_err(errored)?;
            if let Some(h) = hs.iter().find(|h| !cat.is_zero(h)).or(hs.first()) {
                let hf = cat.image_factorise(h);
                let u = cat.compose(&hf.zero_epi, e).map_err(errored)?;
                let d = cat
                    .diagonal_fill_in(e, &hf.image, &u, h)
                    .map_err(|err| fail(format!("fill-in failed: {err}"), &[("f", f), ("h", h)]))?;
                if !cat.mor_eq(&d, &hf.zero_epi) {
                    return Err(fail("diagonal differs from e_h", &[("f", f), ("h", h), ("d", &d)]));
                }
                if self.sweep.exhaustive {
                    let nobj = cat.source(&hf.image.mor);
                    let mut count = 0;
                    for d2 in self.sweep.fresh(&iobj, &nobj).map_err(errored)? {
                        let t1 = cat.compose(&d2, e).map_err(errored)?;
                        let t2 = cat.compose(&hf.image.mor, &d2).map_err(errored)?;
                        if cat.mor_eq(&t1, &u) && cat.mor_eq(&t2, h) {
                            count += 1;
                        }
                    }
                    if count != 1 {
                        return Err(fail(format!("{count} diagonals"), &[("f", f), ("h", h)]));
                    }
                }
                built += 1;
            }
        }
        Ok(built)
    }

    /// Ortholattice laws, De Morgan and orthomodularity.
    pub fn omod(&self, i: usize) -> Check<C::Morphism> {
        let l = &self.lattices[i];
        checks::check_ortho(l)?;
        checks::check_de_morgan(l)?;
        checks::check_orthomodular(l)
    }

    /// Booleanness, its strengthened form, the Boolean implication, and
    /// agreement of Booleanness with distributivity.
    pub fn boolean(&self, i: usize) -> Check<C::Morphism> {
        let l = &self.lattices[i];
        let b = checks::check_boolean(self.cat, l);
        let d = checks::check_distributive(l);
        if b.is_ok() != d.is_ok() {
            return Err(fail("Booleanness and distributivity disagree", &[]));
        }
        b?;
        checks::check_strengthened_boolean(self.cat, l)?;
        checks::check_heyting(l)
    }

    /// `∃_f ⊣ f⁻¹` and the companion laws for every `f` out of object `i`.
    pub fn adjoint(&self, i: usize) -> Check<C::Morphism> {
        for j in 0..self.sweep.len() {
            for f in self.sweep.hom(i, j) {
                checks::check_adjunction(self.cat, f, &self.lattices[i], &self.lattices[j])?;
            }
        }
        Ok(())
    }

    /// Beck-Chevalley for every `f` out of object `i` against every kernel
    /// into its target.
    pub fn beck_chevalley(&mut self, i: usize) -> Check<C::Morphism> {
        for j in 0..self.sweep.len() {
            let gs = self.lattices[j].elements.clone();
            for g in &gs {
                let ly = self.lattice_for(&self.cat.source(&g.mor)).map_err(errored)?;
                for f in self.sweep.hom(i, j) {
                    checks::check_beck_chevalley(self.cat, f, g, &ly)?;
                }
            }
        }
        Ok(())
    }

    /// `(Hom(X, Y), ≤)` is a poset with bottom `0`, preserved by
    /// post-composition with kernels, pre-composition with cokernels and `†`.
    pub fn order(&mut self, i: usize) -> Check<C::Morphism> {
        let cat = self.cat;
        let x = self.sweep.objects[i].clone();
        for j in 0..self.sweep.len() {
            let hs = self.sweep.hom(i, j).to_vec();
            if hs.len() > self.order_cap {
                continue;
            }
            let y = self.sweep.objects[j].clone();
            let facs: Vec<_> = hs.iter().map(|f| cat.full_factorise(f)).collect();
            let n = hs.len();
            let mut leq = vec![vec![false; n]; n];
            for a in 0..n {
                for b in 0..n {
                    leq[a][b] = leq_from_factorisations(cat, &facs[a], &facs[b])
                        .map_err(errored)?
                        .is_some();
                }
            }
            let zero = cat.zero_morphism(&x, &y);
            for a in 0..n {
                if !leq[a][a] {
                    return Err(fail("f ≰ f", &[("f", &hs[a])]));
                }
                if !is_leq(cat, &zero, &hs[a]).map_err(errored)? {
                    return Err(fail("0 ≰ f", &[("f", &hs[a])]));
                }
                for b in 0..n {
                    if leq[a][b] && leq[b][a] && !cat.mor_eq(&hs[a], &hs[b]) {
                        return Err(fail("≤ is not antisymmetric", &[("f", &hs[a]), ("g", &hs[b])]));
                    }
                    if !leq[a][b] {
                        continue;
                    }
                    for c in 0..n {
                        if leq[b][c] && !leq[a][c] {
                            return Err(fail(
                                "≤ is not transitive",
                                &[("f", &hs[a]), ("g", &hs[b]), ("h", &hs[c])],
                            ));
                        }
                    }
                    self.preservation(&hs[a], &hs[b], &x, &y)?;
                }
            }
        }
        Ok(())
    }

    /// Kernels out of `y` and cokernels into `x` taken from the swept lattices.
    fn preservation(&self, f: &C::Morphism, g: &C::Morphism, x: &C::Object, y: &C::Object) -> Check<C::Morphism> {
        let cat = self.cat;
        let kernels: Vec<&C::Morphism> = self
            .lattices
            .iter()
            .flat_map(|l| l.elements.iter().map(|m| &m.mor))
            .filter(|m| cat.source(m) == *y)
            .collect();
        let cokernels: Vec<C::Morphism> = self
            .lattices
            .iter()
            .flat_map(|l| l.elements.iter().map(|m| cat.dagger(&m.mor)))
            .filter(|c| cat.target(c) == *x)
            .collect();
        let leq = |a: &C::Morphism, b: &C::Morphism| is_leq(cat, a, b).map_err(errored);
        if !leq(&cat.dagger(f), &cat.dagger(g))? {
            return Err(fail("f ≤ g but f† ≰ g†", &[("f", f), ("g", g)]));
        }
        for k in kernels {
            let (kf, kg) = (cat.compose(k, f).map_err(errored)?, cat.compose(k, g).map_err(errored)?);
            if !leq(&kf, &kg)? {
                return Err(fail("f ≤ g but k ∘ f ≰ k ∘ g", &[("f", f), ("g", g), ("k", k)]));
            }
        }
        for c in &cokernels {
            let (fc, gc) = (cat.compose(f, c).map_err(errored)?, cat.compose(g, c).map_err(errored)?);
            if !leq(&fc, &gc)? {
                return Err(fail("f ≤ g but f ∘ c ≰ g ∘ c", &[("f", f), ("g", g), ("c", c)]));
            }
        }
        Ok(())
    }

    /// Effects: round trips, `m ≤ n ⇔ ⌈m⌉ ≤ ⌈n⌉`, `⌈m⌉ ≤ id`, and (when
    /// exhaustive) every self-adjoint idempotent below `id` is some `⌈m⌉`.
    pub fn effects(&self, i: usize) -> Check<C::Morphism> {
        let cat = self.cat;
        let l = &self.lattices[i];
        checks::check_effects(cat, l)?;
        let effects: Vec<C::Morphism> = l.elements.iter().map(|m| cat.effect_of(m)).collect();
        let id = cat.identity(&l.codomain);
        for a in 0..l.len() {
            if !is_leq(cat, &effects[a], &id).map_err(errored)? {
                return Err(fail("⌈m⌉ ≰ id", &[("m", &l.elements[a].mor)]));
            }
            for b in 0..l.len() {
                if l.leq[a][b] != is_leq(cat, &effects[a], &effects[b]).map_err(errored)? {
                    return Err(fail(
                        "m ≤ n does not match ⌈m⌉ ≤ ⌈n⌉",
                        &[("m", &l.elements[a].mor), ("n", &l.elements[b].mor)],
                    ));
                }
            }
        }
        if self.sweep.exhaustive {
            for p in self.sweep.hom(i, i) {
                let below_id = is_leq(cat, p, &id).map_err(errored)?;
                if cat.is_effect(p) && below_id && !effects.iter().any(|e| cat.mor_eq(e, p)) {
                    return Err(fail("effect not of the form ⌈m⌉", &[("p", p)]));
                }
            }
        }
        Ok(())
    }

    /// Atomicity, atomisticity, the three equivalent simplicity conditions,
    /// and, given a simple generator `I` among the probes, that the atoms are
    /// exactly the nonzero kernels out of `I`.
    pub fn atoms(&mut self, i: usize) -> Check<C::Morphism> {
        let cat = self.cat;
        let l = self.lattices[i].clone();
        if !l.is_atomic() || !l.is_atomistic() {
            return Err(fail("lattice is not atomic and atomistic", &[]));
        }
        let x = self.sweep.objects[i].clone();
        // Every nonzero kernel out of x is an atom of its codomain's lattice.
        let mut kernels_are_atoms = !cat.is_zero_object(&x);
        let mut offending = None;
        for j in 0..self.sweep.len() {
            let lt = &self.lattices[j];
            for k in self.sweep.hom(i, j) {
                if cat.is_zero(k) || !cat.is_kernel(k) {
                    continue;
                }
                let idx = lt.index_of(cat, &KernelSub::from_kernel(k.clone()));
                if !idx.is_some_and(|a| lt.covers(lt.bottom, a)) {
                    kernels_are_atoms = false;
                    offending.get_or_insert_with(|| k.clone());
                }
            }
            // Sampled homsets rarely contain kernels; the lattices do.
            for (a, m) in lt.elements.iter().enumerate() {
                if cat.source(&m.mor) == x && a != lt.bottom && !lt.covers(lt.bottom, a) {
                    kernels_are_atoms = false;
                    offending.get_or_insert_with(|| m.mor.clone());
                }
            }
        }
        let one_is_atom = l.covers(l.bottom, l.top);
        let two_elements = self.is_ksub_simple(i).map_err(errored)?;
        if one_is_atom != two_elements || two_elements != kernels_are_atoms {
            return Err(fail(
                format!(
                    "simplicity conditions disagree: 1 atom {one_is_atom}, two elements {two_elements}, kernels atoms {kernels_are_atoms}"
                ),
                &offending.iter().map(|k| ("k", k)).collect::<Vec<_>>(),
            ));
        }
        if !self.sweep.exhaustive {
            return Ok(());
        }
        if let Some(u) = self.simple_generator().map_err(errored)? {
            let uobj = self.sweep.objects[u].clone();
            let mut from_unit = Vec::new();
            for k in self.kernels_from(&uobj, &x).map_err(errored)? {
                if !cat.is_zero(&k) {
                    from_unit.push(KernelSub::from_kernel(k));
                }
            }
            let atoms = l.atoms();
            let hit: Vec<usize> = from_unit.iter().filter_map(|k| l.index_of(cat, k)).collect();
            if hit.len() != from_unit.len() || atoms.iter().any(|a| !hit.contains(a)) || hit.iter().any(|h| !atoms.contains(h)) {
                return Err(fail("atoms are not the nonzero kernels out of the simple generator", &[]));
            }
        }
        Ok(())
    }

    /// The kernels among the maps `u -> x`.
    pub fn kernels_from(&mut self, u: &C::Object, x: &C::Object) -> Result<Vec<C::Morphism>> {
        let cat = self.cat;
        Ok(self
            .sweep
            .fresh(u, x)?
            .into_iter()
            .filter(|k| cat.is_kernel(k))
            .collect())
    }

    /// `KSub(I) = {0, 1}` with `0 ≠ 1`.
    pub fn is_ksub_simple(&self, i: usize) -> Result<bool> {
        let l = &self.lattices[i];
        Ok(l.len() == 2)
    }

    /// `f = g` whenever `f ∘ x = g ∘ x` for all kernels `x: I ↣ X`, over all
    /// parallel pairs between probe objects.
    pub fn is_ksub_generator(&mut self, i: usize) -> Result<bool> {
        let cat = self.cat;
        let u = self.sweep.objects[i].clone();
        for &a in &self.small.clone() {
            let xs = self.kernels_from(&u, &self.sweep.objects[a].clone())?;
            for &b in &self.small.clone() {
                let hs = self.sweep.hom(a, b).to_vec();
                for f in &hs {
                    for g in &hs {
                        if cat.mor_eq(f, g) {
                            continue;
                        }
                        let mut agree = true;
                        for x in &xs {
                            if !cat.mor_eq(&cat.compose(f, x)?, &cat.compose(g, x)?) {
                                agree = false;
                                break;
                            }
                        }
                        if agree {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// The first probe object that is a KSub-simple KSub-generator.
    pub fn simple_generator(&mut self) -> Result<Option<usize>> {
        for &i in &self.small.clone() {
            if self.is_ksub_simple(i)? && self.is_ksub_generator(i)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// The sublattice of `KSub(ℂⁿ)` generated by the coordinate lines, the
/// diagonal `Δ = span(e₁ + e₂)` when `n ≥ 2`, and `extra`. At `n = 2` this is
/// `{0, κ₁, κ₂, Δ, Δ⊥, 1}`.
pub fn fdhilb_lattice(cat: &FdHilb, n: Dim, extra: &[LinearMap]) -> Result<KSubLattice<FdHilb>> {
    let one = Complex64::new(1.0, 0.0);
    let mut gens = Vec::new();
    for i in 0..n.0 {
        let mut v = vec![Complex64::new(0.0, 0.0); n.0];
        v[i] = one;
        gens.push(KernelSub::from_kernel(LinearMap::line(&v)?));
    }
    if n.0 >= 2 {
        let mut v = vec![Complex64::new(0.0, 0.0); n.0];
        v[0] = one;
        v[1] = one;
        gens.push(KernelSub::from_kernel(LinearMap::line(&v)?));
    }
    gens.extend(extra.iter().filter(|m| m.tgt() == n).cloned().map(KernelSub::from_kernel));
    KSubLattice::generate(cat, &n, gens, 256)
}

/// The FdHilb context: dimensions `0..=max_dim`, `samples` seeded maps per
/// shape, and [`fdhilb_lattice`] lattices.
pub fn fdhilb_context<'a>(
    cat: &'a FdHilb,
    max_dim: usize,
    samples: usize,
    seed: u64,
    extra: &'a [LinearMap],
) -> Result<Context<'a, FdHilb>> {
    let objects = (0..=max_dim).map(Dim).collect();
    Context::sampled(
        cat,
        objects,
        3,
        samples,
        seed,
        Box::new(move |x| fdhilb_lattice(cat, *x, extra)),
    )
}

/// Whether `f` is monic against every pair of maps out of the probe objects.
pub fn is_mono_on<C: KernelOps>(
    cat: &C,
    f: &C::Morphism,
    probes: &[Vec<C::Morphism>],
) -> Result<bool> {
    for hs in probes {
        let images: Vec<C::Morphism> = hs.iter().map(|g| cat.compose(f, g)).collect::<Result<_>>()?;
        for a in 0..hs.len() {
            for b in a + 1..hs.len() {
                if cat.mor_eq(&images[a], &images[b]) && !cat.mor_eq(&hs[a], &hs[b]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Sorts report lines by object, then law.
pub fn sort_report(lines: &mut [LawCheck]) {
    lines.sort_by(|a, b| (&a.object, &a.law).cmp(&(&b.object, &b.law)));
}

/// The `D_kck` suite over an enumerable Boolean base: the base is Boolean,
/// `D_kck` passes the axioms, kernel = dagger mono = mono = zero-mono, and
/// projection is a dagger functor that preserves kernels and whose
/// restriction to each homset is injective; `KSub` agrees with the base.
pub fn run_kck<C>(base: &C, max_size: usize, cap: u128) -> Vec<LawCheck>
where
    C: Enumerable + JsonPayload + Clone,
{
    let line = |object: String, r: Check<crate::kck::KckMorphism<C::Morphism>>, kck: &Kck<C>| LawCheck {
        law: Law::Kck.name().into(),
        instance: format!("{}_kck", base.name()),
        object,
        pass: r.is_ok(),
        witness: r.err().map(|w| witness_json(kck, &w)),
    };
    let kck = match Kck::new(base.clone(), max_size) {
        Ok(k) => k,
        Err(e) => {
            return vec![LawCheck {
                law: Law::Kck.name().into(),
                instance: format!("{}_kck", base.name()),
                object: "*".into(),
                pass: false,
                witness: Some(json!({"note": e.to_string()})),
            }]
        }
    };
    let size = max_size.min(2);
    let mut ctx = match Context::enumerable(&kck, size, cap) {
        Ok(c) => c,
        Err(e) => {
            return vec![LawCheck {
                law: Law::Kck.name().into(),
                instance: format!("{}_kck", base.name()),
                object: "*".into(),
                pass: false,
                witness: Some(json!({"note": e.to_string()})),
            }]
        }
    };
    let mut out = Vec::new();
    for i in 0..ctx.sweep.len() {
        let object = ctx.label(&ctx.sweep.objects[i].clone());
        let r = ctx
            .axioms(i)
            .and_then(|_| kck_classes(&ctx, i))
            .and_then(|_| kck_projection(&ctx, i))
            .and_then(|_| kck_ksub(&ctx, i));
        out.push(line(object, r, &kck));
    }
    sort_report(&mut out);
    out
}

fn kck_classes<C: Enumerable>(ctx: &Context<'_, Kck<C>>, i: usize) -> Check<crate::kck::KckMorphism<C::Morphism>> {
    let cat = ctx.cat;
    let probes: Vec<Vec<_>> = ctx.small.iter().map(|&w| ctx.sweep.hom(w, i).to_vec()).collect();
    for j in 0..ctx.sweep.len() {
        for f in ctx.sweep.hom(i, j) {
            let kernel = cat.is_kernel(f);
            let dmono = cat.is_dagger_mono(f);
            let mono = is_mono_on(cat, f, &probes).map_err(errored)?;
            let zmono = cat.is_zero_mono(f);
            if !(kernel == dmono && dmono == mono && mono == zmono) {
                return Err(fail(
                    format!("classes differ: kernel {kernel}, dagger mono {dmono}, mono {mono}, zero-mono {zmono}"),
                    &[("f", f)],
                ));
            }
        }
    }
    Ok(())
}

fn kck_projection<C: Enumerable>(ctx: &Context<'_, Kck<C>>, i: usize) -> Check<crate::kck::KckMorphism<C::Morphism>> {
    let kck = ctx.cat;
    let b = kck.base();
    for j in 0..ctx.sweep.len() {
        let hs = ctx.sweep.hom(i, j);
        let projected: Vec<C::Morphism> = hs.iter().map(|f| kck.project(f)).collect();
        for a in 0..hs.len() {
            for c in a + 1..hs.len() {
                if b.mor_eq(&projected[a], &projected[c]) {
                    return Err(fail("projection is not injective", &[("f", &hs[a]), ("g", &hs[c])]));
                }
            }
            let f = &hs[a];
            if !b.mor_eq(&kck.project(&kck.dagger(f)), &b.dagger(&projected[a])) {
                return Err(fail("projection does not preserve †", &[("f", f)]));
            }
            let k1 = KernelSub::from_kernel(kck.project(&kck.kernel(f)));
            let k2 = KernelSub::from_kernel(b.kernel(&projected[a]));
            if !b.subobject_eq(&k1, &k2).map_err(errored)? {
                return Err(fail("projection does not preserve kernels", &[("f", f)]));
            }
            for l in 0..ctx.sweep.len() {
                for g in ctx.sweep.hom(j, l) {
                    let gf = kck.compose(g, f).map_err(errored)?;
                    let direct = b.compose(&kck.project(g), &projected[a]).map_err(errored)?;
                    if !b.mor_eq(&kck.project(&gf), &direct) {
                        return Err(fail("projection does not preserve composition", &[("f", f), ("g", g)]));
                    }
                }
            }
        }
        let x = &ctx.sweep.objects[i];
        let y = &ctx.sweep.objects[j];
        if !b.is_zero(&kck.project(&kck.zero_morphism(x, y))) {
            return Err(fail("projection does not preserve 0", &[]));
        }
    }
    Ok(())
}

fn kck_ksub<C: Enumerable>(ctx: &Context<'_, Kck<C>>, i: usize) -> Check<crate::kck::KckMorphism<C::Morphism>> {
    let kck = ctx.cat;
    let b = kck.base();
    let l = &ctx.lattices[i];
    let base_l = KSubLattice::build(b, &ctx.sweep.objects[i]).map_err(errored)?;
    if l.len() != base_l.len() {
        return Err(fail("KSub sizes differ from the base", &[]));
    }
    let image: Vec<usize> = l
        .elements
        .iter()
        .map(|m| base_l.index_of(b, &KernelSub::from_kernel(kck.project(&m.mor))))
        .collect::<Option<_>>()
        .ok_or_else(|| fail("projected kernel missing from the base lattice", &[]))?;
    for a in 0..l.len() {
        for c in 0..l.len() {
            if l.leq[a][c] != base_l.leq[image[a]][image[c]] {
                return Err(fail("KSub orders differ", &[("m", &l.elements[a].mor), ("n", &l.elements[c].mor)]));
            }
        }
    }
    Ok(())
}
