//! Euler (Bloch–Messiah) factorization `S = O · (M ⊕ M⁻¹) · O′`.
//!
//! Computed from the SVD `S = U Σ Vᵀ`. The polar factors are `P = U Σ Uᵀ`
//! (symmetric, positive, symplectic) and `O_s = U Vᵀ` (orthogonal symplectic).
//! For symplectic `P`, the eigenvalue pairs `(m, 1/m)` have eigenvectors `v`
//! and `Jv`, so an orthonormal isotropic set `V` of eigenvectors for the
//! larger member of each pair yields the orthogonal symplectic
//! `W = [V, −JV]` with `P = W (M ⊕ M⁻¹) Wᵀ`. Hence `O = W`, `O′ = Wᵀ O_s`.

use nalgebra::{DMatrix, DVector};

use super::symplectic::{ensure_symplectic, j_matrix, symplectic_residual};
use crate::error::{Error, Result};
use crate::linalg::{max_abs, RMat};
use crate::tolerances::Tolerances;

#[derive(Debug, Clone, PartialEq)]
pub struct EulerDecomposition {
    pub o: RMat,
    pub o_prime: RMat,
    /// Diagonal of `M`, descending, each `≥ 1` up to roundoff.
    pub m: Vec<f64>,
    pub reconstruction_residual: f64,
}

impl EulerDecomposition {
    /// `M ⊕ M⁻¹`.
    pub fn squeeze(&self) -> RMat {
        let n = self.m.len();
        DMatrix::from_fn(2 * n, 2 * n, |r, c| match (r == c, r < n) {
            (true, true) => self.m[r],
            (true, false) => 1.0 / self.m[r - n],
            _ => 0.0,
        })
    }

    pub fn reconstruct(&self) -> RMat {
        &self.o * self.squeeze() * &self.o_prime
    }
}

pub fn euler_decompose(s: &RMat, tol: &Tolerances) -> Result<EulerDecomposition> {
    ensure_symplectic(s, tol.symp)?;
    let dim = s.nrows();
    let n = dim / 2;
    let j = j_matrix(n);

    let svd = s.clone().svd(true, true);
    let u = svd.u.as_ref().expect("requested U");
    let v_t = svd.v_t.as_ref().expect("requested Vᵀ");
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));

    let p = {
        let us = DMatrix::from_fn(dim, dim, |r, c| u[(r, c)] * svd.singular_values[c]);
        us * u.transpose()
    };
    let polar = u * v_t;

    // isotropic orthonormal picks: eigenvectors in descending order, then the
    // standard basis as a fallback for degenerate unit clusters
    let candidates = order
        .iter()
        .map(|&k| u.column(k).into_owned())
        .chain((0..dim).map(|i| DVector::from_fn(dim, |r, _| if r == i { 1.0 } else { 0.0 })));
    let mut picked: Vec<DVector<f64>> = Vec::with_capacity(n);
    let mut images: Vec<DVector<f64>> = Vec::with_capacity(n);
    for mut c in candidates {
        if picked.len() == n {
            break;
        }
        for b in picked.iter().chain(images.iter()) {
            let proj = b.dot(&c);
            c.axpy(-proj, b, 1.0);
        }
        let norm = c.norm();
        if norm > 0.1 {
            c /= norm;
            images.push(&j * &c);
            picked.push(c);
        }
    }
    if picked.len() != n {
        return Err(Error::DecompositionFailure {
            what: "euler isotropic basis",
            residual: (n - picked.len()) as f64,
            allowed: 0.0,
        });
    }

    let mut w = RMat::zeros(dim, dim);
    for (k, (v, jv)) in picked.iter().zip(&images).enumerate() {
        w.set_column(k, v);
        w.set_column(k + n, &(-jv));
    }
    let m: Vec<f64> = picked.iter().map(|v| v.dot(&(&p * v))).collect();
    let o_prime = w.transpose() * polar;

    let mut out = EulerDecomposition {
        o: w,
        o_prime,
        m,
        reconstruction_residual: 0.0,
    };
    out.reconstruction_residual = max_abs(&(out.reconstruct() - s));
    let allowed = tol.recon * max_abs(s).max(1.0);
    if out.reconstruction_residual > allowed {
        return Err(Error::DecompositionFailure {
            what: "euler reconstruction",
            residual: out.reconstruction_residual,
            allowed,
        });
    }
    let orth = max_abs(&(out.o.transpose() * &out.o - RMat::identity(dim, dim)))
        .max(max_abs(&(out.o_prime.transpose() * &out.o_prime - RMat::identity(dim, dim))))
        .max(symplectic_residual(&out.o)?)
        .max(symplectic_residual(&out.o_prime)?);
    if orth > tol.symp {
        return Err(Error::DecompositionFailure {
            what: "euler orthogonal-symplectic factors",
            residual: orth,
            allowed: tol.symp,
        });
    }
    Ok(out)
}
