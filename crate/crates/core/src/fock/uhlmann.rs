//! The literal Uhlmann transition probability and trace products.

use num_complex::Complex64;

use super::{FockDensityMatrix, CLAMP, DENSE_LIMIT};
use crate::error::{Error, Result};
use crate::linalg::{adjoint_mul, herm_eigen_sorted, max_abs_c, CMat};

fn compatible(a: &FockDensityMatrix, b: &FockDensityMatrix) -> Result<()> {
    if a.modes() != b.modes() || a.cutoff() != b.cutoff() {
        return Err(Error::Domain(format!(
            "incompatible states: {} modes at cutoff {} vs {} modes at cutoff {}",
            a.modes(),
            a.cutoff(),
            b.modes(),
            b.cutoff()
        )));
    }
    Ok(())
}

fn clamped_root(x: f64) -> Result<f64> {
    if x < -CLAMP {
        return Err(Error::Domain(format!(
            "matrix is not positive semidefinite: eigenvalue {x:e}"
        )));
    }
    Ok(x.max(0.0).sqrt())
}

/// `[Tr √(√ρ₁ ρ₂ √ρ₁)]²` on dense matrices, exactly as written: diagonalize
/// `ρ₁`, form `√ρ₁ ρ₂ √ρ₁`, diagonalize again, sum the square roots.
pub fn uhlmann_fidelity_dense(rho1: &CMat, rho2: &CMat) -> Result<f64> {
    if rho1.shape() != rho2.shape() || rho1.nrows() != rho1.ncols() {
        return Err(Error::Domain("density matrices must be square and equal in size".into()));
    }
    for rho in [rho1, rho2] {
        let skew = max_abs_c(&(rho - rho.adjoint()));
        if skew > 1e-12 {
            return Err(Error::Domain(format!(
                "density matrix is not Hermitian (deviation {skew:e})"
            )));
        }
    }
    let (values, vectors) = herm_eigen_sorted(rho1);
    let mut scaled = vectors.clone();
    for (k, v) in values.iter().enumerate() {
        scaled.column_mut(k).scale_mut(clamped_root(*v)?);
    }
    let root1 = scaled * vectors.adjoint();
    let inner = &root1 * rho2 * &root1;
    let inner = (&inner + inner.adjoint()) * Complex64::new(0.5, 0.0);
    let (mu, _) = herm_eigen_sorted(&inner);
    let mut sum = 0.0;
    for m in mu {
        sum += clamped_root(m)?;
    }
    Ok(sum * sum)
}

/// Uhlmann fidelity of two truncated states.
///
/// With `ρᵢ = XᵢXᵢ†`, `Tr √(√ρ₁ρ₂√ρ₁) = ‖√ρ₁√ρ₂‖₁ = ‖X₁†X₂‖₁`, the sum of
/// singular values of a `rank₁ × rank₂` matrix. Singular values come out
/// directly, so rounding-level eigenvalues are never square-rooted (in
/// [`uhlmann_fidelity_dense`] they contribute noise of order `√ε` each).
pub fn uhlmann_fidelity_numeric(rho1: &FockDensityMatrix, rho2: &FockDensityMatrix) -> Result<f64> {
    compatible(rho1, rho2)?;
    let cross = adjoint_mul(&rho1.factor(), &rho2.factor());
    let trace_norm: f64 = cross.singular_values().iter().sum();
    Ok(trace_norm * trace_norm)
}

/// `Tr(ρ₁ρ₂⋯ρₖ)`; dense products for small spaces, otherwise the cyclic
/// rearrangement `Tr(X₁†X₂ · X₂†X₃ ⋯ Xₖ†X₁)` of the factors.
pub fn trace_product_numeric(rhos: &[&FockDensityMatrix]) -> Result<Complex64> {
    let Some(first) = rhos.first() else {
        return Err(Error::Domain("empty product".into()));
    };
    for r in rhos {
        compatible(first, r)?;
    }
    if first.dim() <= DENSE_LIMIT {
        let mut acc = first.to_dense();
        for r in &rhos[1..] {
            acc *= r.to_dense();
        }
        return Ok(acc.trace());
    }
    let factors: Vec<CMat> = rhos.iter().map(|r| r.factor()).collect();
    let k = factors.len();
    let mut acc = adjoint_mul(&factors[0], &factors[1 % k]);
    for i in 1..k {
        acc *= adjoint_mul(&factors[i], &factors[(i + 1) % k]);
    }
    Ok(acc.trace())
}
