//! The homset order against direct descriptions in each instance.

use dagkern_core::category::{DaggerKernelCategory, Enumerable};
use dagkern_core::instances::{FdHilb, FinPInj, FinRel, FinSet, LinearMap, Relation};
use dagkern_core::order::{check_order_preservation, homset_leq, is_leq};

const CAP: u128 = 1 << 20;

/// `R ≤ S` in Rel: S restricted to dom R × ran R is R, and no pair of S
/// links dom R to outside ran R or ran R to outside dom R.
fn block_oracle(r: &Relation, s: &Relation) -> bool {
    let (dr, rr) = (r.domain_mask(), r.range_mask());
    let (ds, rs) = (s.domain_mask(), s.range_mask());
    if dr & !ds != 0 || rr & !rs != 0 {
        return false;
    }
    let inside = |m: u64, i: usize| m >> i & 1 == 1;
    for x in 0..r.src().len() {
        for y in 0..r.tgt().len() {
            let relevant = (inside(dr, x) && inside(rs, y)) || (inside(ds, x) && inside(rr, y));
            if relevant && r.related(x, y) != s.related(x, y) {
                return false;
            }
        }
    }
    true
}

#[test]
fn rel_order_is_the_block_condition() {
    for (n, m) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 2)] {
        let (x, y) = (FinSet::range(n), FinSet::range(m));
        let hom = FinRel.enumerate_homset(&x, &y, CAP).unwrap();
        for r in &hom {
            for s in &hom {
                assert_eq!(is_leq(&FinRel, r, s).unwrap(), block_oracle(r, s), "{r:?} vs {s:?}");
            }
        }
    }
}

#[test]
fn rel_order_is_strictly_finer_than_inclusion() {
    let x = FinSet::range(1);
    let y = FinSet::new(["a", "b"]).unwrap();
    let r = Relation::from_label_pairs(x.clone(), y.clone(), &[("0", "a")]).unwrap();
    let s = Relation::from_label_pairs(x, y, &[("0", "a"), ("0", "b")]).unwrap();
    assert!(r.is_subrelation_of(&s));
    assert!(!is_leq(&FinRel, &r, &s).unwrap());

    // Within the block condition, ≤ does imply inclusion.
    let (x, y) = (FinSet::range(2), FinSet::range(2));
    let hom = FinRel.enumerate_homset(&x, &y, CAP).unwrap();
    for r in &hom {
        for s in &hom {
            if is_leq(&FinRel, r, s).unwrap() {
                assert!(r.is_subrelation_of(s));
            }
        }
    }
}

#[test]
fn pinj_order_is_extension() {
    for (n, m) in [(2, 2), (2, 3), (3, 3)] {
        let (x, y) = (FinSet::range(n), FinSet::range(m));
        let hom = FinPInj.enumerate_homset(&x, &y, CAP).unwrap();
        for f in &hom {
            for g in &hom {
                let extends = (0..n).all(|i| f.apply(i).is_none() || f.apply(i) == g.apply(i));
                assert_eq!(is_leq(&FinPInj, f, g).unwrap(), extends);
            }
        }
    }
}

#[test]
fn order_is_a_partial_order_on_small_homsets() {
    let (x, y) = (FinSet::range(2), FinSet::range(2));
    let hom = FinRel.enumerate_homset(&x, &y, CAP).unwrap();
    let leq: Vec<Vec<bool>> = hom
        .iter()
        .map(|f| hom.iter().map(|g| is_leq(&FinRel, f, g).unwrap()).collect())
        .collect();
    for i in 0..hom.len() {
        assert!(leq[i][i]);
        for j in 0..hom.len() {
            if i != j {
                assert!(!(leq[i][j] && leq[j][i]));
            }
            for k in 0..hom.len() {
                if leq[i][j] && leq[j][k] {
                    assert!(leq[i][k]);
                }
            }
        }
    }
}

#[test]
fn zero_is_least() {
    let (x, y) = (FinSet::range(2), FinSet::range(3));
    let zero = FinRel.zero_morphism(&x, &y);
    for f in FinRel.enumerate_homset(&x, &y, CAP).unwrap() {
        let w = homset_leq(&FinRel, &zero, &f).unwrap();
        assert!(w.is_some());
    }
}

#[test]
fn fdhilb_orthogonal_extension() {
    let cat = FdHilb::default();
    let f = LinearMap::from_real_rows(2, &[&[1.0, 0.0], &[0.0, 0.0]]).unwrap();
    // g acts as f on span e₁ and maps span e₂ into the complement of im f.
    let g = LinearMap::from_real_rows(2, &[&[1.0, 0.0], &[0.0, 2.0]]).unwrap();
    assert!(is_leq(&cat, &f, &g).unwrap());
    assert!(!is_leq(&cat, &g, &f).unwrap());

    let bent = LinearMap::from_real_rows(2, &[&[1.0, 0.1], &[0.0, 2.0]]).unwrap();
    assert!(!is_leq(&cat, &f, &bent).unwrap());
    let scaled = LinearMap::from_real_rows(2, &[&[1.5, 0.0], &[0.0, 2.0]]).unwrap();
    assert!(!is_leq(&cat, &f, &scaled).unwrap());
}

#[test]
fn preservation_on_small_pinj() {
    let objs: Vec<FinSet> = (0..=3).map(FinSet::range).collect();
    // Kernels with a given source, and cokernels with a given target.
    let out_of = |x: &FinSet| -> Vec<_> {
        objs.iter()
            .flat_map(|z| FinPInj.kernels_into(z))
            .filter(|k| FinPInj.source(k) == *x)
            .collect()
    };
    for (n, m) in [(1, 2), (2, 2)] {
        let (x, y) = (FinSet::range(n), FinSet::range(m));
        let hom = FinPInj.enumerate_homset(&x, &y, CAP).unwrap();
        let ks = out_of(&y);
        let cs: Vec<_> = out_of(&x).iter().map(|k| FinPInj.dagger(k)).collect();
        for f in &hom {
            for g in &hom {
                if !is_leq(&FinPInj, f, g).unwrap() {
                    continue;
                }
                for k in &ks {
                    for c in &cs {
                        assert!(check_order_preservation(&FinPInj, f, g, k, c).unwrap().all());
                    }
                }
            }
        }
    }
}
