use thiserror::Error;

/// Everything that can go wrong while building, decomposing or comparing
/// Gaussian states.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("symmetry error: matrix deviates from its transpose by {deviation:e} (allowed {allowed:e})")]
    Symmetry { deviation: f64, allowed: f64 },

    #[error("definiteness error: smallest eigenvalue {min_eigenvalue:e} is not positive")]
    Definiteness { min_eigenvalue: f64 },

    #[error("uncertainty-violation: smallest symplectic eigenvalue {symplectic_eigenvalue} is below 1 (A + iJ has eigenvalue {min_eigenvalue:e})")]
    UncertaintyViolation {
        symplectic_eigenvalue: f64,
        min_eigenvalue: f64,
    },

    #[error("conditioning error: condition number {condition:e} exceeds {limit:e}")]
    Conditioning { condition: f64, limit: f64 },

    #[error("decomposition failure: {what} residual {residual:e} exceeds {allowed:e}")]
    DecompositionFailure {
        what: &'static str,
        residual: f64,
        allowed: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("numerical-consistency error: {what} imaginary residue {residue:e} exceeds {allowed:e}")]
    NumericalConsistency {
        what: &'static str,
        residue: f64,
        allowed: f64,
    },

    #[error("truncation error: {0}")]
    Truncation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-friendly name of the violated constraint.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidDimension(_) => "invalid-dimension",
            Error::Symmetry { .. } => "symmetry",
            Error::Definiteness { .. } => "definiteness",
            Error::UncertaintyViolation { .. } => "uncertainty-violation",
            Error::Conditioning { .. } => "conditioning",
            Error::DecompositionFailure { .. } => "decomposition-failure",
            Error::Domain(_) => "domain",
            Error::NumericalConsistency { .. } => "numerical-consistency",
            Error::Truncation(_) => "truncation",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
