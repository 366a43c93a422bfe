//! Williamson normal form `A = Sᵀ (D ⊕ D) S`.
//!
//! The symplectic eigenvalues are the positive eigenvalues of the Hermitian
//! matrix `i·A^{1/2} J A^{1/2}`. Each eigenvector `x + iy` of eigenvalue `d`
//! satisfies `Kx = d·y`, `Ky = −d·x` for `K = A^{1/2} J A^{1/2}`, with `x ⊥ y`
//! and `|x| = |y|`, so the rescaled real and imaginary parts assemble into an
//! orthogonal `R` with `Rᵀ K R = D J`. Then `S = D^{−1/2} Rᵀ A^{1/2}`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::state::CorrelationMatrix;
use super::symplectic::{j_matrix, symplectic_residual};
use crate::error::{Error, Result};
use crate::linalg::{herm_eigen_sorted, max_abs, sqrt_psd, CMat, RMat};
use crate::tolerances::Tolerances;

#[derive(Debug, Clone, PartialEq)]
pub struct WilliamsonDecomposition {
    /// Symplectic congruence with `A = Sᵀ (D ⊕ D) S`.
    pub s: RMat,
    /// Symplectic eigenvalues, descending.
    pub d: Vec<f64>,
    pub reconstruction_residual: f64,
    pub symplectic_residual: f64,
}

impl WilliamsonDecomposition {
    /// `D ⊕ D` as a `2n × 2n` diagonal matrix.
    pub fn diagonal(&self) -> RMat {
        let n = self.d.len();
        DMatrix::from_fn(2 * n, 2 * n, |r, c| if r == c { self.d[r % n] } else { 0.0 })
    }
}

/// Symplectic eigenvalues of a symmetric positive-definite matrix, descending.
/// No validation; used for diagnostics on matrices that may be unphysical.
pub fn symplectic_eigenvalues(a: &RMat) -> Vec<f64> {
    let n = a.nrows() / 2;
    let (values, _) = herm_eigen_sorted(&kernel(a, n).0);
    values.into_iter().take(n).collect()
}

/// Returns `(i·A^{1/2} J A^{1/2}, A^{1/2})`.
fn kernel(a: &RMat, n: usize) -> (CMat, RMat) {
    let root = sqrt_psd(a);
    let k = &root * j_matrix(n) * &root;
    (k.map(|x| Complex64::new(0.0, x)), root)
}

pub fn williamson(a: &CorrelationMatrix, tol: &Tolerances) -> Result<WilliamsonDecomposition> {
    let n = a.modes();
    let dim = 2 * n;
    let (h, root) = kernel(a.matrix(), n);
    let (values, vectors) = herm_eigen_sorted(&h);
    let d: Vec<f64> = values[..n].to_vec();

    // eigenvectors of the positive half, canonicalized within degenerate clusters
    let mut chosen: Vec<nalgebra::DVector<Complex64>> = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (d[start] - d[end]).abs() <= tol.pure * d[start].max(1.0) {
            end += 1;
        }
        if end - start == 1 {
            chosen.push(vectors.column(start).into_owned());
        } else {
            chosen.extend(canonical_basis(&vectors.columns(start, end - start).into_owned()));
        }
        start = end;
    }

    let mut r = RMat::zeros(dim, dim);
    let sqrt2 = std::f64::consts::SQRT_2;
    for (k, w) in chosen.iter().enumerate() {
        for i in 0..dim {
            r[(i, k)] = sqrt2 * w[i].im;
            r[(i, k + n)] = sqrt2 * w[i].re;
        }
    }

    let mut s = r.transpose() * root;
    for (k, dk) in d.iter().enumerate() {
        let f = 1.0 / dk.sqrt();
        s.row_mut(k).scale_mut(f);
        s.row_mut(k + n).scale_mut(f);
    }

    let mut out = WilliamsonDecomposition {
        s,
        d,
        reconstruction_residual: 0.0,
        symplectic_residual: 0.0,
    };
    let rebuilt = out.s.transpose() * out.diagonal() * &out.s;
    out.reconstruction_residual = max_abs(&(rebuilt - a.matrix()));
    out.symplectic_residual = symplectic_residual(&out.s)?;
    let allowed = tol.recon * max_abs(a.matrix());
    if out.reconstruction_residual > allowed {
        return Err(Error::DecompositionFailure {
            what: "williamson reconstruction",
            residual: out.reconstruction_residual,
            allowed,
        });
    }
    Ok(out)
}

/// Deterministic orthonormal basis of the column span of `cluster`: project
/// the standard basis vectors in index order and Gram-Schmidt them.
fn canonical_basis(cluster: &CMat) -> Vec<nalgebra::DVector<Complex64>> {
    let (dim, m) = cluster.shape();
    let projector = cluster * cluster.adjoint();
    let mut basis: Vec<nalgebra::DVector<Complex64>> = Vec::with_capacity(m);
    for i in 0..dim {
        if basis.len() == m {
            break;
        }
        let mut v = projector.column(i).into_owned();
        for b in &basis {
            let c = b.dotc(&v);
            v -= b * c;
        }
        let norm = v.norm();
        if norm > 1e-3 {
            basis.push(v / Complex64::new(norm, 0.0));
        }
    }
    debug_assert_eq!(basis.len(), m);
    basis
}
