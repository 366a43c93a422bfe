//! Correlation matrices, symplectic structure and the decompositions the
//! fidelity formulas are built on.

mod euler;
mod phi;
mod state;
mod symplectic;
mod williamson;

pub use euler::{euler_decompose, EulerDecomposition};
pub use phi::{phi, phi_residual, SquareRootCorrelation};
pub use state::{
    conjugate, is_pure, squeezed_thermal_state, tensor, thermal_state, validate,
    CorrelationMatrix,
};
pub use symplectic::{ensure_symplectic, standard_form, symplectic_residual, SymplecticForm};
pub use williamson::{symplectic_eigenvalues, williamson, WilliamsonDecomposition};

pub(crate) use symplectic::j_matrix;
