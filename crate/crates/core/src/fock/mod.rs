//! Brute-force verification in a truncated Fock space.
//!
//! One- and two-mode Gaussian states are assembled from number states by
//! applying truncated squeeze and passive (beam-splitter/phase) unitaries,
//! then compared with the literal Uhlmann formula. Nothing here calls the
//! fidelity formulas it is meant to check; the only shared machinery is the
//! Williamson/Euler factorization used to *build* the state.

mod density;
mod ladder;
mod uhlmann;
mod unitary;

pub use density::{gaussian_density, thermal_density, FockDensityMatrix, OracleEnvelope};
pub use ladder::second_moments;
pub use uhlmann::{trace_product_numeric, uhlmann_fidelity_dense, uhlmann_fidelity_numeric};
pub use unitary::{squeeze_unitary, TruncatedUnitary};

/// Largest per-mode cutoff accepted by the oracle.
pub const MAX_CUTOFF: usize = 100;

/// Eigenvalues above `−CLAMP` are clamped to zero before square roots.
pub const CLAMP: f64 = 1e-10;

/// Above this Hilbert-space dimension trace products are taken on the
/// factors `ρ = XX†` instead of dense `dim × dim` matrices.
pub const DENSE_LIMIT: usize = 400;
