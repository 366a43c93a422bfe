//! Small dense linear-algebra helpers on top of nalgebra.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type RMat = DMatrix<f64>;
pub type CMat = DMatrix<Complex64>;

pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn max_abs(m: &RMat) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

pub fn max_abs_c(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.norm()))
}

pub fn to_complex(m: &RMat) -> CMat {
    m.map(|x| Complex64::new(x, 0.0))
}

/// `a + i·b` for real `a`, `b`.
pub fn complex_from_parts(re: &RMat, im: &RMat) -> CMat {
    re.zip_map(im, Complex64::new)
}

/// Eigendecomposition of a real symmetric matrix with eigenvalues sorted in
/// descending order (eigenvectors permuted accordingly).
pub fn sym_eigen_sorted(a: &RMat) -> (Vec<f64>, RMat) {
    let eig = SymmetricEigen::new(a.clone());
    let mut order: Vec<usize> = (0..a.nrows()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = RMat::from_fn(a.nrows(), a.ncols(), |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Eigendecomposition of a complex Hermitian matrix, eigenvalues descending.
pub fn herm_eigen_sorted(h: &CMat) -> (Vec<f64>, CMat) {
    let eig = SymmetricEigen::new(h.clone());
    let mut order: Vec<usize> = (0..h.nrows()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMat::from_fn(h.nrows(), h.ncols(), |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Principal square root of a symmetric positive semidefinite matrix.
/// Eigenvalues are clamped at zero.
pub fn sqrt_psd(a: &RMat) -> RMat {
    let (values, vectors) = sym_eigen_sorted(a);
    let scaled = RMat::from_fn(a.nrows(), a.ncols(), |r, c| {
        vectors[(r, c)] * values[c].max(0.0).sqrt()
    });
    &scaled * vectors.transpose()
}

/// `ln det` of a symmetric positive-definite matrix via its Cholesky factor.
pub fn log_det_spd(a: &RMat) -> Result<f64> {
    let chol = a.clone().cholesky().ok_or_else(|| {
        let min = sym_eigen_sorted(a).0.last().copied().unwrap_or(f64::NAN);
        Error::Definiteness {
            min_eigenvalue: min,
        }
    })?;
    Ok(2.0 * chol.l_dirty().diagonal().iter().map(|x| x.ln()).sum::<f64>())
}

/// Principal logarithm of the determinant of a complex matrix, accumulated
/// from the LU factors: `ln|det| + i·arg(det)` with the argument in (−π, π].
pub fn log_det_complex(m: &CMat) -> Result<Complex64> {
    let lu = m.clone().lu();
    let u = lu.u();
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..u.nrows() {
        let pivot = u[(k, k)];
        if pivot.norm() == 0.0 {
            return Err(Error::Conditioning {
                condition: f64::INFINITY,
                limit: f64::MAX,
            });
        }
        acc += pivot.ln();
    }
    let sign: f64 = lu.p().determinant();
    if sign < 0.0 {
        acc += Complex64::new(0.0, std::f64::consts::PI);
    }
    // fold the accumulated phase back onto the principal branch
    let phase = Complex64::new(0.0, acc.im).exp();
    Ok(Complex64::new(acc.re, phase.arg()))
}

/// Solve for the inverse of a complex square matrix.
pub fn inverse_c(m: &CMat) -> Result<CMat> {
    m.clone().try_inverse().ok_or(Error::Conditioning {
        condition: f64::INFINITY,
        limit: f64::MAX,
    })
}

/// `a† b` computed with four real products, which go through the fast real
/// kernel instead of the generic complex one.
pub fn adjoint_mul(a: &CMat, b: &CMat) -> CMat {
    let (ar, ai) = (a.map(|z| z.re), a.map(|z| z.im));
    let (br, bi) = (b.map(|z| z.re), b.map(|z| z.im));
    let (art, ait) = (ar.transpose(), ai.transpose());
    let re = &art * &br + &ait * &bi;
    let im = &art * &bi - &ait * &br;
    complex_from_parts(&re, &im)
}
