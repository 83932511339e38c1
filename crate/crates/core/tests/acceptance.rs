//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Expected values come from oracles written here (subset enumeration,
//! counting formulas, literal matrices), not from the library under test.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;

use dagkern_core::category::{DaggerKernelCategory, Enumerable, KernelSub, DEFAULT_ENUMERATION_CAP as CAP};
use dagkern_core::instances::{
    partial_injection_count, pinj_to_relation, BoolHat, Dim, FdHilb, FinPInj, FinRel, FinSet,
    LinearMap, Relation,
};
use dagkern_core::io::JsonPayload;
use dagkern_core::kck::Kck;
use dagkern_core::ksub::checks::{check_boolean, check_orthomodular, check_sasaki};
use dagkern_core::ksub::{KSubLattice, LogicOps};
use dagkern_core::laws::{fdhilb_context, fdhilb_lattice, is_mono_on, run_kck, Context, Law};
use dagkern_core::KernelOps;

const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;

fn run_law<C: KernelOps + JsonPayload>(ctx: &mut Context<'_, C>, law: Law) -> Result<usize, String> {
    let report = ctx.run(&[law]);
    match report.iter().find(|l| !l.pass) {
        Some(l) => Err(format!(
            "{} {} on {}: {}",
            l.law,
            l.instance,
            l.object,
            l.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
        )),
        None => Ok(report.len()),
    }
}

fn enumerable_law<C: KernelOps + JsonPayload + Enumerable>(cat: &C, size: usize, law: Law) -> Result<usize, String> {
    let mut ctx = Context::enumerable(cat, size, CAP).map_err(|e| e.to_string())?;
    run_law(&mut ctx, law)
}

fn all_enumerable(size: usize, law: Law) -> Result<usize, String> {
    Ok(enumerable_law(&FinRel, size, law)?
        + enumerable_law(&FinPInj, size, law)?
        + enumerable_law(&BoolHat::powerset(3), size, law)?)
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn line(v: &[f64]) -> KernelSub<LinearMap> {
    let v: Vec<Complex64> = v.iter().map(|&x| c(x)).collect();
    KernelSub::from_kernel(LinearMap::line(&v).unwrap())
}

fn homsets_total<C: Enumerable>(cat: &C, objects: &[C::Object]) -> u128 {
    objects
        .iter()
        .flat_map(|x| objects.iter().map(move |y| cat.homset_size(x, y)))
        .sum()
}

fn axioms() -> Outcome {
    let checks = all_enumerable(3, Law::Axioms)?;
    let cat = FdHilb::default();
    let mut ctx = fdhilb_context(&cat, 3, 200, SEED, &[]).map_err(|e| e.to_string())?;
    let fd = run_law(&mut ctx, Law::Axioms)?;
    Ok(format!("{checks} enumerable objects, {fd} FdHilb dimensions × 200 samples"))
}

fn orthomodularity() -> Outcome {
    let n = all_enumerable(3, Law::Omod)?;
    let cat = FdHilb::default();
    let l = fdhilb_lattice(&cat, Dim(2), &[]).map_err(|e| e.to_string())?;
    if l.len() != 6 {
        return Err(format!("ℂ² sublattice has {} elements", l.len()));
    }
    check_orthomodular(&l).map_err(|w| w.note)?;
    // Independent pass over comparable pairs: m ≤ n ⇒ m ∨ (m⊥ ∧ n) = n.
    let mut pairs = 0;
    for a in &l.elements {
        for b in &l.elements {
            if cat.subobject_leq(a, b).unwrap() {
                pairs += 1;
                let rhs = cat.join(a, &cat.meet(&cat.ortho(a), b).unwrap()).unwrap();
                if !cat.subobject_eq(&rhs, b).unwrap() {
                    return Err("ℂ² orthomodularity violated".into());
                }
            }
        }
    }
    Ok(format!("{n} lattices, {pairs} comparable ℂ² pairs"))
}

fn adjunction() -> Outcome {
    let rel_objects = FinRel.sweep_objects(2);
    let two = FinSet::range(2);
    if FinRel.homset_size(&two, &two) != 16 {
        return Err("2×2 relation homset is not 2⁴".into());
    }
    let rel_maps = homsets_total(&FinRel, &rel_objects);
    enumerable_law(&FinRel, 2, Law::Adjoint)?;
    enumerable_law(&FinPInj, 3, Law::Adjoint)?;
    let b = BoolHat::powerset(3);
    enumerable_law(&b, 3, Law::Adjoint)?;
    let pinj_maps = homsets_total(&FinPInj, &FinPInj.sweep_objects(3));
    let b_maps = homsets_total(&b, &b.sweep_objects(3));
    Ok(format!("{rel_maps} relations, {pinj_maps} partial injections, {b_maps} B̂ maps"))
}

fn beck_chevalley() -> Outcome {
    let n = all_enumerable(3, Law::Bc)?;
    Ok(format!("{n} source objects"))
}

fn non_distributivity() -> Outcome {
    let cat = FdHilb::default();
    let (k1, k2, d) = (line(&[1.0, 0.0]), line(&[0.0, 1.0]), line(&[1.0, 1.0]));
    let lhs = cat.meet(&k1, &cat.join(&d, &k2).unwrap()).unwrap();
    let rhs = cat
        .join(&cat.meet(&k1, &d).unwrap(), &cat.meet(&k1, &k2).unwrap())
        .unwrap();
    let proj = |m: &KernelSub<LinearMap>| cat.effect_of(m);
    let expect_k1 = LinearMap::from_real_rows(2, &[&[1.0, 0.0], &[0.0, 0.0]]).unwrap();
    if proj(&lhs).max_abs_diff(&expect_k1) > 1e-8 {
        return Err("κ₁ ∧ (Δ ∨ κ₂) ≠ κ₁".into());
    }
    if lhs.mor.src() != Dim(1) || rhs.mor.src() != Dim(0) {
        return Err("(κ₁ ∧ Δ) ∨ (κ₁ ∧ κ₂) ≠ 0".into());
    }
    let l = fdhilb_lattice(&cat, Dim(2), &[]).unwrap();
    if check_boolean(&cat, &l).is_ok() {
        return Err("FdHilb reported Boolean".into());
    }
    for size in 0..=3 {
        let x = FinSet::range(size);
        check_boolean(&FinRel, &KSubLattice::build(&FinRel, &x).unwrap()).map_err(|w| w.note)?;
        check_boolean(&FinPInj, &KSubLattice::build(&FinPInj, &x).unwrap()).map_err(|w| w.note)?;
    }
    let b = BoolHat::powerset(3);
    for x in b.elements() {
        check_boolean(&b, &KSubLattice::build(&b, &x).unwrap()).map_err(|w| w.note)?;
    }
    Ok("κ₁ ∧ (Δ ∨ κ₂) = κ₁, (κ₁ ∧ Δ) ∨ (κ₁ ∧ κ₂) = 0".into())
}

fn sasaki_on<C: KernelOps>(cat: &C, l: &KSubLattice<C>) -> Result<usize, String> {
    check_sasaki(cat, l).map_err(|w| w.note)?;
    let mut triples = 0;
    for k in &l.elements {
        for m in &l.elements {
            for n in &l.elements {
                let left = cat.subobject_leq(&cat.and_then(k, m).unwrap(), n).unwrap();
                let right = cat.subobject_leq(k, &cat.sasaki_hook(m, n).unwrap()).unwrap();
                if left != right {
                    return Err("k & m ≤ n ⇎ k ≤ m ⊃ n".into());
                }
                triples += 1;
            }
        }
    }
    Ok(triples)
}

fn sasaki() -> Outcome {
    let three = FinSet::range(3);
    let b = BoolHat::powerset(3);
    let eight = [
        sasaki_on(&FinRel, &KSubLattice::build(&FinRel, &three).unwrap())?,
        sasaki_on(&FinPInj, &KSubLattice::build(&FinPInj, &three).unwrap())?,
        sasaki_on(&b, &KSubLattice::build(&b, &b.top_elem()).unwrap())?,
    ];
    if eight.iter().any(|&t| t != 512) {
        return Err(format!("triple counts {eight:?}"));
    }
    let cat = FdHilb::default();
    let fd = sasaki_on(&cat, &fdhilb_lattice(&cat, Dim(2), &[]).unwrap())?;
    all_enumerable(3, Law::Sasaki)?;
    Ok(format!("3 × 512 triples, {fd} ℂ² triples"))
}

fn pairs_of(r: &Relation) -> BTreeSet<(usize, usize)> {
    r.pairs().into_iter().collect()
}

fn kck_iso() -> Outcome {
    let kck = Kck::new(FinRel, 2).map_err(|e| e.to_string())?;
    let sets: Vec<FinSet> = (0..=2).map(FinSet::range).collect();
    let mut total = 0;
    for x in &sets {
        for y in &sets {
            let hom = kck.enumerate_homset(x, y, CAP).unwrap();
            let projected: BTreeSet<_> = hom.iter().map(|f| pairs_of(&kck.project(f))).collect();
            let pinj: BTreeSet<_> = FinPInj
                .enumerate_homset(x, y, CAP)
                .unwrap()
                .iter()
                .map(|f| pairs_of(&pinj_to_relation(f)))
                .collect();
            let expected = partial_injection_count(x.len(), y.len()) as usize;
            if hom.len() != expected || projected.len() != expected || projected != pinj {
                return Err(format!("Rel_kck({}, {}) is not PInj", x.len(), y.len()));
            }
            total += hom.len();
            for f in &hom {
                let pf = kck.project(f);
                if pairs_of(&kck.project(&kck.dagger(f))) != pairs_of(&FinRel.dagger(&pf)) {
                    return Err("projection does not commute with †".into());
                }
                let k = kck.project(&kck.kernel(f));
                if FinRel.target(&k) != *x || k.range_mask() != !pf.domain_mask() & x.full_mask() {
                    return Err("projection does not commute with kernels".into());
                }
                for z in &sets {
                    for g in kck.enumerate_homset(y, z, CAP).unwrap() {
                        let gf = kck.project(&kck.compose(&g, f).unwrap());
                        let direct = FinRel.compose(&kck.project(&g), &pf).unwrap();
                        if pairs_of(&gf) != pairs_of(&direct) {
                            return Err("projection does not commute with composition".into());
                        }
                    }
                }
            }
        }
    }
    let report = run_kck(&FinRel, 2, CAP);
    if let Some(l) = report.iter().find(|l| !l.pass) {
        return Err(format!("D_kck suite failed on {}", l.object));
    }
    Ok(format!("{total} morphisms, bijective onto PInj"))
}

fn rel(x: usize, y: &[&str], pairs: &[(&str, &str)]) -> Relation {
    Relation::from_label_pairs(FinSet::range(x), FinSet::new(y.iter().copied()).unwrap(), pairs).unwrap()
}

fn class_chains() -> Outcome {
    let sets: Vec<FinSet> = (0..=3).map(FinSet::range).collect();
    let unit = FinSet::range(1);
    let mut checked = 0;
    for x in &sets {
        let probes = vec![FinRel.enumerate_homset(&unit, x, CAP).unwrap()];
        let pprobes = vec![FinPInj.enumerate_homset(&unit, x, CAP).unwrap()];
        for y in &sets {
            for f in FinRel.enumerate_homset(x, y, CAP).unwrap() {
                let (k, d) = (FinRel.is_kernel(&f), FinRel.is_dagger_mono(&f));
                let (m, z) = (is_mono_on(&FinRel, &f, &probes).unwrap(), FinRel.is_zero_mono(&f));
                if (k && !d) || (d && !m) || (m && !z) {
                    return Err(format!("Rel chain broken at {:?}", f.pairs()));
                }
                checked += 1;
            }
            for f in FinPInj.enumerate_homset(x, y, CAP).unwrap() {
                let flags = [
                    FinPInj.is_kernel(&f),
                    FinPInj.is_dagger_mono(&f),
                    is_mono_on(&FinPInj, &f, &pprobes).unwrap(),
                    FinPInj.is_zero_mono(&f),
                ];
                if flags.iter().any(|&b| b != flags[0]) {
                    return Err(format!("PInj classes differ at {:?}", f.table()));
                }
                checked += 1;
            }
        }
    }
    let ab = ["a", "b"];
    let zero_mono = rel(2, &ab, &[("0", "a"), ("1", "a")]);
    let probes = vec![FinRel.enumerate_homset(&unit, &FinSet::range(2), CAP).unwrap()];
    if !FinRel.is_zero_mono(&zero_mono) || is_mono_on(&FinRel, &zero_mono, &probes).unwrap() {
        return Err("{(0,a),(1,a)} is not a zero-mono non-mono".into());
    }
    let mono = rel(2, &["a", "b", "c"], &[("0", "a"), ("0", "b"), ("1", "b"), ("1", "c")]);
    if !is_mono_on(&FinRel, &mono, &probes).unwrap() || FinRel.is_dagger_mono(&mono) {
        return Err("{(0,a),(0,b),(1,b),(1,c)} is not a mono non-dagger-mono".into());
    }
    let total = Relation::from_label_pairs(FinSet::range(1), FinSet::new(ab).unwrap(), &[("0", "a"), ("0", "b")]).unwrap();
    if !FinRel.is_dagger_mono(&total) || FinRel.is_kernel(&total) {
        return Err("1 -> {a,b} total relation is not a dagger mono non-kernel".into());
    }

    let cat = FdHilb::default();
    let ctx = fdhilb_context(&cat, 2, 200, SEED, &[]).map_err(|e| e.to_string())?;
    for i in 0..ctx.sweep.len() {
        for j in 0..ctx.sweep.len() {
            for f in ctx.sweep.hom(i, j) {
                // Oracle: injective iff f†f is invertible.
                let gram = f.matrix().adjoint() * f.matrix();
                let injective = gram.nrows() == 0 || gram.determinant().norm() > 1e-9;
                if cat.is_kernel(f) != cat.is_dagger_mono(f) || injective != cat.is_zero_mono(f) {
                    return Err("FdHilb class equalities fail".into());
                }
                checked += 1;
            }
        }
    }
    let half = LinearMap::from_real_rows(2, &[&[1.0, 0.0], &[0.0, 0.5]]).unwrap();
    if !cat.is_zero_mono(&half) || cat.is_dagger_mono(&half) {
        return Err("diag(1, ½) is not a mono non-dagger-mono".into());
    }
    Ok(format!("{checked} morphisms; three properness witnesses"))
}

fn effects() -> Outcome {
    let n = all_enumerable(3, Law::Effect)?;
    let cat = FdHilb::default();
    let ctx = fdhilb_context(&cat, 2, 20, SEED, &[]).map_err(|e| e.to_string())?;
    let i = ctx.sweep.objects.iter().position(|d| *d == Dim(2)).unwrap();
    ctx.effects(i).map_err(|w| w.note)?;
    Ok(format!("{n} enumerable lattices and the ℂ² projector set"))
}

fn atoms() -> Outcome {
    for size in 0..=3 {
        let x = FinSet::range(size);
        let singletons: BTreeSet<u64> = (0..size).map(|i| 1u64 << i).collect();
        let rl = KSubLattice::build(&FinRel, &x).unwrap();
        let got: BTreeSet<u64> = rl.atoms().iter().map(|&a| rl.elements[a].mor.range_mask()).collect();
        let pl = KSubLattice::build(&FinPInj, &x).unwrap();
        let gotp: BTreeSet<u64> = pl.atoms().iter().map(|&a| pl.elements[a].mor.range_mask()).collect();
        if got != singletons || gotp != singletons {
            return Err(format!("atoms of KSub({size}) are not the singletons"));
        }
    }
    for law_size in [3] {
        enumerable_law(&FinRel, law_size, Law::Atoms)?;
        enumerable_law(&FinPInj, law_size, Law::Atoms)?;
        enumerable_law(&BoolHat::powerset(3), law_size, Law::Atoms)?;
    }
    for (name, unit) in [
        ("FinRel", generator_size(&FinRel)?),
        ("FinPInj", generator_size(&FinPInj)?),
    ] {
        if unit != 1 {
            return Err(format!("{name}: no one-point simple generator"));
        }
    }
    Ok("atoms are singletons; 1 is a simple generator".into())
}

fn generator_size<C: KernelOps + JsonPayload + Enumerable>(cat: &C) -> Result<usize, String> {
    let mut ctx = Context::enumerable(cat, 2, CAP).map_err(|e| e.to_string())?;
    let u = ctx
        .simple_generator()
        .map_err(|e| e.to_string())?
        .ok_or("no simple generator")?;
    Ok(cat.object_size(&ctx.sweep.objects[u]))
}

fn factorisation() -> Outcome {
    let n = all_enumerable(3, Law::Factor)?;
    let cat = FdHilb::default();
    let mut ctx = fdhilb_context(&cat, 3, 200, SEED, &[]).map_err(|e| e.to_string())?;
    run_law(&mut ctx, Law::Factor)?;
    Ok(format!("{n} enumerable objects and FdHilb dim ≤ 3"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("axiom suite", axioms),
        ("orthomodularity", orthomodularity),
        ("quantifier adjunction", adjunction),
        ("Beck-Chevalley", beck_chevalley),
        ("non-distributivity witness", non_distributivity),
        ("Sasaki adjunction", sasaki),
        ("Rel_kck is PInj", kck_iso),
        ("class chains", class_chains),
        ("effect isomorphism", effects),
        ("atoms and generators", atoms),
        ("factorisation and fill-in", factorisation),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.2}s)", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
