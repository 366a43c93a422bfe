use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{max_abs, RMat};

/// The standard complex structure `J = [[0, I], [−I, 0]]` on `2n`-dimensional
/// phase space, coordinates ordered as `(q₁…qₙ, p₁…pₙ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticForm {
    n: usize,
    j: RMat,
}

impl SymplecticForm {
    pub fn modes(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &RMat {
        &self.j
    }

    pub fn into_matrix(self) -> RMat {
        self.j
    }
}

pub fn standard_form(n: usize) -> Result<SymplecticForm> {
    if n == 0 {
        return Err(Error::InvalidDimension(
            "a symplectic form needs at least one mode".into(),
        ));
    }
    Ok(SymplecticForm {
        n,
        j: j_matrix(n),
    })
}

pub(crate) fn j_matrix(n: usize) -> RMat {
    DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        if c == r + n {
            1.0
        } else if r == c + n {
            -1.0
        } else {
            0.0
        }
    })
}

/// `max |SᵀJS − J|`.
pub fn symplectic_residual(s: &RMat) -> Result<f64> {
    let dim = s.nrows();
    if dim == 0 || !dim.is_multiple_of(2) || s.ncols() != dim {
        return Err(Error::InvalidDimension(format!(
            "symplectic matrices are square of even size, got {}x{}",
            s.nrows(),
            s.ncols()
        )));
    }
    let j = j_matrix(dim / 2);
    Ok(max_abs(&(s.transpose() * &j * s - j)))
}

/// Checks `SᵀJS = J` to `tol`, scaled by `max(1, ‖S‖²)` since the residual
/// of a product grows with the entries.
pub fn ensure_symplectic(s: &RMat, tol: f64) -> Result<()> {
    let residual = symplectic_residual(s)?;
    let scale = max_abs(s).powi(2).max(1.0);
    if residual > tol * scale {
        return Err(Error::Domain(format!(
            "matrix is not symplectic: max|SᵀJS − J| = {residual:e}"
        )));
    }
    Ok(())
}
