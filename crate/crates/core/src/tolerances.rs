//! Numerical tolerances shared by every module.
//!
//! All thresholds live in one [`Tolerances`] value so that callers (and the
//! command line via `--tolerances <file>`) can override them together.
//! Missing fields in a TOML override fall back to the defaults.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Symmetry of a correlation matrix, relative to its max-norm.
    pub sym: f64,
    /// Lower slack on symplectic eigenvalues and on the spectrum of `A + iJ`.
    pub eig: f64,
    /// Distance of a symplectic eigenvalue from 1 still counted as pure.
    pub pure: f64,
    /// Residual of `SᵀJS = J` and of orthogonality checks.
    pub symp: f64,
    /// Reconstruction residual, relative to the max-norm of the target.
    pub recon: f64,
    /// Imaginary residue allowed on the matrix 𝒪, relative to its max-norm.
    pub imag: f64,
    /// Slack above 1 that is clamped back to exactly 1.
    pub fid: f64,
    /// Agreement between independent fidelity routes.
    pub xcheck: f64,
    /// Largest accepted condition number of an input matrix.
    pub max_condition: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        sym: 1e-10,
        eig: 1e-9,
        pure: 1e-8,
        symp: 1e-9,
        recon: 1e-8,
        imag: 1e-8,
        fid: 1e-9,
        xcheck: 1e-8,
        max_condition: 1e12,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
