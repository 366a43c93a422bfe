//! Correlation matrix of the square root of a Gaussian density operator.
//!
//! `Φ(A) = A(I + √(I + (JA)⁻²))` solves `Φ − JΦ⁻¹J = 2A`. In Williamson
//! coordinates the correction term is `Sᵀ √(D² − I) S`, which is how it is
//! evaluated here.

use super::state::CorrelationMatrix;
use super::symplectic::j_matrix;
use super::williamson::{williamson, WilliamsonDecomposition};
use crate::error::{Error, Result};
use crate::linalg::{log_det_spd, max_abs, RMat};
use crate::tolerances::Tolerances;

#[derive(Debug, Clone, PartialEq)]
pub struct SquareRootCorrelation {
    /// `Φ(A)`.
    pub phi: RMat,
    /// `ln det Φ(A)`.
    pub log_det_phi: f64,
    /// Normalization of the characteristic function of `√ρ`: `K = (det Φ)^{1/4}`.
    pub k: f64,
}

impl SquareRootCorrelation {
    pub fn det_phi(&self) -> f64 {
        self.log_det_phi.exp()
    }
}

pub fn phi(a: &CorrelationMatrix, tol: &Tolerances) -> Result<SquareRootCorrelation> {
    let w = williamson(a, tol)?;
    phi_from_williamson(a, &w, tol)
}

fn phi_from_williamson(
    a: &CorrelationMatrix,
    w: &WilliamsonDecomposition,
    tol: &Tolerances,
) -> Result<SquareRootCorrelation> {
    let n = a.modes();
    let mut scaled = w.s.clone();
    for (k, d) in w.d.iter().enumerate() {
        // pure modes contribute nothing; the square root would amplify
        // roundoff in d to its square root
        let c = if d - 1.0 <= tol.pure {
            0.0
        } else {
            (d * d - 1.0).sqrt()
        };
        scaled.row_mut(k).scale_mut(c);
        scaled.row_mut(k + n).scale_mut(c);
    }
    let correction = w.s.transpose() * scaled;
    let phi = a.matrix() + (&correction + correction.transpose()) * 0.5;
    let log_det_phi = log_det_spd(&phi).map_err(|_| Error::DecompositionFailure {
        what: "square-root correlation matrix is not positive definite",
        residual: f64::NAN,
        allowed: 0.0,
    })?;
    Ok(SquareRootCorrelation {
        phi,
        log_det_phi,
        k: (0.25 * log_det_phi).exp(),
    })
}

/// `max |Φ − JΦ⁻¹J − 2A|`, the residual of the defining equation.
pub fn phi_residual(a: &CorrelationMatrix, phi: &RMat) -> f64 {
    let j = j_matrix(a.modes());
    let inv = phi
        .clone()
        .try_inverse()
        .expect("Φ is positive definite");
    max_abs(&(phi - &j * inv * &j - a.matrix() * 2.0))
}
