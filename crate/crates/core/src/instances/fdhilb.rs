//! Finite-dimensional complex Hilbert spaces and linear maps.
//!
//! Objects are dimensions `ℂⁿ`; morphisms are `tgt × src` complex matrices.
//! Kernels are null spaces returned as isometries whose columns are an
//! orthonormal basis in a canonical Gram–Schmidt order.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::category::{DaggerKernelCategory, Sampleable};
use crate::error::{Error, Result};

/// Absolute threshold for rank decisions (singular values, pivots).
pub const RANK_TOL: f64 = 1e-9;
/// Absolute threshold for equalities in law checks.
pub const LAW_TOL: f64 = 1e-8;

/// The Hilbert space `ℂⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dim(pub usize);

/// A linear map between `ℂ^src` and `ℂ^tgt`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    src: Dim,
    tgt: Dim,
    mat: DMatrix<Complex64>,
}

impl LinearMap {
    pub fn new(src: Dim, tgt: Dim, mat: DMatrix<Complex64>) -> Result<Self> {
        if mat.nrows() != tgt.0 || mat.ncols() != src.0 {
            return Err(Error::InvalidPayload(format!(
                "matrix is {}x{}, expected {}x{}",
                mat.nrows(),
                mat.ncols(),
                tgt.0,
                src.0
            )));
        }
        if mat.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidPayload("non-finite entry".into()));
        }
        Ok(LinearMap { src, tgt, mat })
    }

    /// From row-major entries, `rows.len()` rows of `src` columns each.
    pub fn from_rows(src: usize, rows: &[Vec<Complex64>]) -> Result<Self> {
        if rows.iter().any(|r| r.len() != src) {
            return Err(Error::InvalidPayload("ragged matrix".into()));
        }
        let tgt = rows.len();
        let mat = DMatrix::from_fn(tgt, src, |i, j| rows[i][j]);
        LinearMap::new(Dim(src), Dim(tgt), mat)
    }

    /// From real row-major entries.
    pub fn from_real_rows(src: usize, rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        LinearMap::from_rows(src, &rows)
    }

    /// The isometry `ℂ -> ℂⁿ` onto the line through `v` (normalised).
    pub fn line(v: &[Complex64]) -> Result<Self> {
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm <= RANK_TOL {
            return Err(Error::InvalidPayload("zero vector spans no line".into()));
        }
        let mat = DMatrix::from_fn(v.len(), 1, |i, _| v[i] / norm);
        LinearMap::new(Dim(1), Dim(v.len()), mat)
    }

    pub fn src(&self) -> Dim {
        self.src
    }

    pub fn tgt(&self) -> Dim {
        self.tgt
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    /// Entrywise sum of parallel maps.
    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(Error::NotParallel);
        }
        Ok(LinearMap {
            src: self.src,
            tgt: self.tgt,
            mat: &self.mat + &other.mat,
        })
    }

    pub fn scale(&self, s: Complex64) -> LinearMap {
        LinearMap {
            src: self.src,
            tgt: self.tgt,
            mat: self.mat.map(|z| z * s),
        }
    }

    /// `max |a_ij - b_ij|`; infinite for shape mismatch.
    pub fn max_abs_diff(&self, other: &LinearMap) -> f64 {
        if self.src != other.src || self.tgt != other.tgt {
            return f64::INFINITY;
        }
        self.mat
            .iter()
            .zip(other.mat.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Orthonormal basis (as columns) of the null space of `a`.
fn null_space(a: &DMatrix<Complex64>, tol: f64) -> DMatrix<Complex64> {
    let (m, n) = a.shape();
    if n == 0 {
        return DMatrix::zeros(0, 0);
    }
    if m == 0 {
        return DMatrix::identity(n, n);
    }
    // Pad with zero rows so the SVD returns a full n×n V.
    let rows = m.max(n);
    let padded = DMatrix::from_fn(rows, n, |i, j| {
        if i < m {
            a[(i, j)]
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("V requested");
    let cols: Vec<usize> = (0..n).filter(|&j| svd.singular_values[j] <= tol).collect();
    let basis = DMatrix::from_fn(n, cols.len(), |i, k| v_t[(cols[k], i)].conj());
    canonical_basis(&basis)
}

/// Canonical orthonormal basis of the column span of an isometry `b`:
/// Gram–Schmidt over the columns of the projector `b b†`, with the first
/// significant entry of each vector made real positive.
fn canonical_basis(b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (n, r) = b.shape();
    if r == 0 {
        return DMatrix::zeros(n, 0);
    }
    let p = b * b.adjoint();
    let mut chosen: Vec<nalgebra::DVector<Complex64>> = Vec::with_capacity(r);
    let residual = |v: &nalgebra::DVector<Complex64>, chosen: &[nalgebra::DVector<Complex64>]| {
        let mut w = v.clone();
        for _ in 0..2 {
            for u in chosen {
                let c = u.dotc(&w);
                w -= u * c;
            }
        }
        w
    };
    let mut used = vec![false; n];
    for i in 0..n {
        if chosen.len() == r {
            break;
        }
        let w = residual(&p.column(i).into_owned(), &chosen);
        if w.norm() > 1e-6 {
            used[i] = true;
            chosen.push(w.unscale(w.norm()));
        }
    }
    while chosen.len() < r {
        // Degenerate fallback: take the largest remaining residual.
        let (i, w) = (0..n)
            .filter(|&i| !used[i])
            .map(|i| (i, residual(&p.column(i).into_owned(), &chosen)))
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .expect("rank does not exceed dimension");
        used[i] = true;
        chosen.push(w.unscale(w.norm()));
    }
    let mut out = DMatrix::zeros(n, r);
    for (k, mut v) in chosen.into_iter().enumerate() {
        if let Some(z) = v.iter().find(|z| z.norm() > 1e-7).copied() {
            v *= z.conj() / z.norm();
        }
        out.set_column(k, &v);
    }
    out
}

/// The category of finite-dimensional Hilbert spaces.
#[derive(Debug, Clone, Copy)]
pub struct FdHilb {
    /// Singular-value threshold for kernel rank decisions.
    pub tolerance: f64,
    /// Entrywise threshold for morphism equality.
    pub law_tolerance: f64,
}

impl Default for FdHilb {
    fn default() -> Self {
        FdHilb {
            tolerance: RANK_TOL,
            law_tolerance: LAW_TOL,
        }
    }
}

impl DaggerKernelCategory for FdHilb {
    type Object = Dim;
    type Morphism = LinearMap;

    fn name(&self) -> &'static str {
        "fdhilb"
    }

    fn source(&self, f: &LinearMap) -> Dim {
        f.src
    }

    fn target(&self, f: &LinearMap) -> Dim {
        f.tgt
    }

    fn identity(&self, x: &Dim) -> LinearMap {
        LinearMap {
            src: *x,
            tgt: *x,
            mat: DMatrix::identity(x.0, x.0),
        }
    }

    fn zero_object(&self) -> Dim {
        Dim(0)
    }

    fn is_zero_object(&self, x: &Dim) -> bool {
        x.0 == 0
    }

    fn zero_morphism(&self, x: &Dim, y: &Dim) -> LinearMap {
        LinearMap {
            src: *x,
            tgt: *y,
            mat: DMatrix::zeros(y.0, x.0),
        }
    }

    fn compose(&self, g: &LinearMap, f: &LinearMap) -> Result<LinearMap> {
        if f.tgt != g.src {
            return Err(Error::ObjectMismatch(format!("{:?} vs {:?}", f.tgt, g.src)));
        }
        Ok(LinearMap {
            src: f.src,
            tgt: g.tgt,
            mat: &g.mat * &f.mat,
        })
    }

    fn dagger(&self, f: &LinearMap) -> LinearMap {
        LinearMap {
            src: f.tgt,
            tgt: f.src,
            mat: f.mat.adjoint(),
        }
    }

    fn kernel(&self, f: &LinearMap) -> LinearMap {
        let basis = null_space(&f.mat, self.tolerance);
        LinearMap {
            src: Dim(basis.ncols()),
            tgt: f.src,
            mat: basis,
        }
    }

    fn mor_eq(&self, f: &LinearMap, g: &LinearMap) -> bool {
        f.max_abs_diff(g) <= self.law_tolerance
    }
}

impl Sampleable for FdHilb {
    /// Independent standard normal real and imaginary parts.
    fn sample_morphism<R: Rng + ?Sized>(&self, x: &Dim, y: &Dim, rng: &mut R) -> LinearMap {
        let mat = DMatrix::from_fn(y.0, x.0, |_, _| {
            Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        LinearMap {
            src: *x,
            tgt: *y,
            mat,
        }
    }
}
