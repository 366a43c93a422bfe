//! The correlation-matrix data model.
//!
//! A zero-mean Gaussian state is fixed by its real symmetric `2n × 2n`
//! correlation matrix `A`, normalized so that the vacuum has `A = I` and the
//! characteristic function reads `exp(−¼ uᵀAu)`.

use nalgebra::DMatrix;

use super::symplectic::{ensure_symplectic, j_matrix};
use super::williamson::symplectic_eigenvalues;
use crate::error::{Error, Result};
use crate::linalg::{herm_eigen_sorted, log_det_spd, max_abs, sym_eigen_sorted, RMat};
use crate::linalg::complex_from_parts;
use crate::tolerances::Tolerances;

/// A validated correlation matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    n: usize,
    a: RMat,
}

impl CorrelationMatrix {
    pub fn modes(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &RMat {
        &self.a
    }

    pub fn into_matrix(self) -> RMat {
        self.a
    }

    pub fn det(&self) -> f64 {
        self.log_det().exp()
    }

    pub fn log_det(&self) -> f64 {
        // validated matrices are positive definite
        log_det_spd(&self.a).expect("validated correlation matrix is positive definite")
    }

    /// `Tr ρ² = det(A)^{−1/2}`.
    pub fn purity(&self) -> f64 {
        (-0.5 * self.log_det()).exp()
    }

    /// True when the matrix is diagonal with equal `q` and `p` variances per
    /// mode, i.e. a product of thermal states.
    pub fn is_thermal_form(&self) -> bool {
        let n = self.n;
        for r in 0..2 * n {
            for c in 0..2 * n {
                if r != c && self.a[(r, c)] != 0.0 {
                    return false;
                }
            }
        }
        (0..n).all(|k| self.a[(k, k)] == self.a[(k + n, k + n)])
    }

    /// Per-mode thermal values `2n̄ + 1` when [`is_thermal_form`] holds.
    ///
    /// [`is_thermal_form`]: CorrelationMatrix::is_thermal_form
    pub fn thermal_diagonal(&self) -> Option<Vec<f64>> {
        self.is_thermal_form()
            .then(|| (0..self.n).map(|k| self.a[(k, k)]).collect())
    }
}

/// Validates a raw matrix as the correlation matrix of a physical state.
///
/// The checks run in order: shape, finiteness, symmetry (relative to the
/// largest entry), positive definiteness, conditioning, and finally the
/// uncertainty relation `A + iJ ⪰ 0`.
pub fn validate(a: RMat, tol: &Tolerances) -> Result<CorrelationMatrix> {
    let dim = a.nrows();
    if dim == 0 || !dim.is_multiple_of(2) || a.ncols() != dim {
        return Err(Error::InvalidDimension(format!(
            "correlation matrix must be square with even size, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::Domain("matrix has non-finite entries".into()));
    }
    let scale = max_abs(&a);
    let deviation = max_abs(&(&a - a.transpose()));
    let allowed = tol.sym * scale;
    if deviation > allowed {
        return Err(Error::Symmetry { deviation, allowed });
    }
    let a = (&a + a.transpose()) * 0.5;

    let (values, _) = sym_eigen_sorted(&a);
    let (max, min) = (values[0], values[dim - 1]);
    if min <= 0.0 {
        return Err(Error::Definiteness {
            min_eigenvalue: min,
        });
    }
    let condition = max / min;
    if condition > tol.max_condition {
        return Err(Error::Conditioning {
            condition,
            limit: tol.max_condition,
        });
    }

    let n = dim / 2;
    let hermitian = complex_from_parts(&a, &j_matrix(n));
    let (spectrum, _) = herm_eigen_sorted(&hermitian);
    let min_eigenvalue = spectrum[dim - 1];
    if min_eigenvalue < -tol.eig {
        let symplectic_eigenvalue = symplectic_eigenvalues(&a).last().copied().unwrap_or(0.0);
        return Err(Error::UncertaintyViolation {
            symplectic_eigenvalue,
            min_eigenvalue,
        });
    }
    Ok(CorrelationMatrix { n, a })
}

/// True iff every symplectic eigenvalue lies within `tol.pure` of 1.
pub fn is_pure(a: &CorrelationMatrix, tol: &Tolerances) -> bool {
    symplectic_eigenvalues(a.matrix())
        .iter()
        .all(|d| (d - 1.0).abs() <= tol.pure)
}

/// Correlation matrix of `ρ₁ ⊗ ρ₂`, in the `(q…, p…)` ordering of the
/// combined system with the modes of `a1` first.
pub fn tensor(a1: &CorrelationMatrix, a2: &CorrelationMatrix) -> CorrelationMatrix {
    let (n1, n2) = (a1.n, a2.n);
    let n = n1 + n2;
    let place1 = |i: usize| if i < n1 { i } else { n + (i - n1) };
    let place2 = |i: usize| if i < n2 { n1 + i } else { n + n1 + (i - n2) };
    let mut out = DMatrix::zeros(2 * n, 2 * n);
    for r in 0..2 * n1 {
        for c in 0..2 * n1 {
            out[(place1(r), place1(c))] = a1.a[(r, c)];
        }
    }
    for r in 0..2 * n2 {
        for c in 0..2 * n2 {
            out[(place2(r), place2(c))] = a2.a[(r, c)];
        }
    }
    CorrelationMatrix { n, a: out }
}

/// `SᵀAS`: the correlation matrix after the Gaussian unitary generated by `S`.
pub fn conjugate(a: &CorrelationMatrix, s: &RMat, tol: &Tolerances) -> Result<CorrelationMatrix> {
    if s.nrows() != a.a.nrows() || s.ncols() != a.a.ncols() {
        return Err(Error::Domain(format!(
            "transform is {}x{} but the state has {} modes",
            s.nrows(),
            s.ncols(),
            a.n
        )));
    }
    ensure_symplectic(s, tol.symp)?;
    validate(s.transpose() * &a.a * s, tol)
}

/// Product of thermal states; `A = diag(2n̄+1) ⊕ diag(2n̄+1)`.
pub fn thermal_state(nbar: &[f64], tol: &Tolerances) -> Result<CorrelationMatrix> {
    if nbar.is_empty() {
        return Err(Error::InvalidDimension("no modes given".into()));
    }
    if let Some(bad) = nbar.iter().find(|x| !x.is_finite() || **x < 0.0) {
        return Err(Error::Domain(format!(
            "mean photon numbers must be non-negative, got {bad}"
        )));
    }
    let n = nbar.len();
    let a = DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        if r == c {
            2.0 * nbar[r % n] + 1.0
        } else {
            0.0
        }
    });
    validate(a, tol)
}

/// Product of rotated squeezed thermal states.
///
/// Mode `j` has `R(θⱼ)ᵀ · diag((2n̄ⱼ+1)e^{2rⱼ}, (2n̄ⱼ+1)e^{−2rⱼ}) · R(θⱼ)` with
/// `R(θ) = [[cos θ, −sin θ], [sin θ, cos θ]]`.
pub fn squeezed_thermal_state(
    nbar: &[f64],
    r: &[f64],
    theta: &[f64],
    tol: &Tolerances,
) -> Result<CorrelationMatrix> {
    let n = nbar.len();
    if r.len() != n || theta.len() != n {
        return Err(Error::Domain(format!(
            "nbar, r and theta must have equal lengths, got {}, {}, {}",
            n,
            r.len(),
            theta.len()
        )));
    }
    if n == 0 {
        return Err(Error::InvalidDimension("no modes given".into()));
    }
    if let Some(bad) = nbar.iter().find(|x| !x.is_finite() || **x < 0.0) {
        return Err(Error::Domain(format!(
            "mean photon numbers must be non-negative, got {bad}"
        )));
    }
    let mut a = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        let v = 2.0 * nbar[k] + 1.0;
        let (s, c) = theta[k].sin_cos();
        let rot = RMat::from_row_slice(2, 2, &[c, -s, s, c]);
        let diag = RMat::from_row_slice(
            2,
            2,
            &[v * (2.0 * r[k]).exp(), 0.0, 0.0, v * (-2.0 * r[k]).exp()],
        );
        let block = rot.transpose() * diag * rot;
        a[(k, k)] = block[(0, 0)];
        a[(k, k + n)] = block[(0, 1)];
        a[(k + n, k)] = block[(1, 0)];
        a[(k + n, k + n)] = block[(1, 1)];
    }
    validate(a, tol)
}
