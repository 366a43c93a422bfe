use nalgebra::{DMatrix, DVector, DVectorView};
use num_complex::Complex64;

use super::unitary::GaussianUnitary;
use super::{CLAMP, MAX_CUTOFF};
use crate::error::{Error, Result};
use crate::gaussian::{williamson, CorrelationMatrix};
use crate::linalg::{herm_eigen_sorted, max_abs_c, CMat};
use crate::tolerances::Tolerances;

/// Thermal components lighter than this fraction of the heaviest are dropped;
/// the dropped weight shows up in [`FockDensityMatrix::deficit`].
const WEIGHT_FLOOR: f64 = 1e-16;

/// A truncated density matrix on `cutoff^modes` number states, stored in
/// spectral-like form `ρ = Σ_k w_k |v_k⟩⟨v_k|`.
///
/// Vectors need not be orthonormal (truncation shortens them); only
/// `ρ = X X†` with `X = V·diag(√w)` is relied upon.
#[derive(Debug, Clone)]
pub struct FockDensityMatrix {
    modes: usize,
    cutoff: usize,
    weights: Vec<f64>,
    vectors: CMat,
}

impl FockDensityMatrix {
    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.cutoff.pow(self.modes as u32)
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn trace(&self) -> f64 {
        self.components().map(|(w, v)| w * v.norm_squared()).sum()
    }

    /// `1 − Tr ρ`: probability lost to truncation.
    pub fn deficit(&self) -> f64 {
        1.0 - self.trace()
    }

    pub(crate) fn components(&self) -> impl Iterator<Item = (f64, DVectorView<'_, Complex64>)> {
        self.weights
            .iter()
            .zip(self.vectors.column_iter())
            .map(|(w, v)| (*w, v))
    }

    /// `X` with `ρ = X X†`.
    pub fn factor(&self) -> CMat {
        let mut x = self.vectors.clone();
        for (k, w) in self.weights.iter().enumerate() {
            x.column_mut(k).scale_mut(w.sqrt());
        }
        x
    }

    pub fn to_dense(&self) -> CMat {
        let x = self.factor();
        &x * x.adjoint()
    }

    /// Wraps a dense Hermitian positive semidefinite matrix.
    pub fn from_dense(modes: usize, cutoff: usize, rho: &CMat) -> Result<FockDensityMatrix> {
        let dim = cutoff.pow(modes as u32);
        if rho.nrows() != dim || rho.ncols() != dim {
            return Err(Error::Domain(format!(
                "expected a {dim}x{dim} matrix for {modes} modes at cutoff {cutoff}"
            )));
        }
        let skew = max_abs_c(&(rho - rho.adjoint()));
        if skew > 1e-12 {
            return Err(Error::Domain(format!(
                "density matrix is not Hermitian (deviation {skew:e})"
            )));
        }
        let (values, vectors) = herm_eigen_sorted(rho);
        if let Some(bad) = values.iter().find(|v| **v < -CLAMP) {
            return Err(Error::Domain(format!(
                "density matrix has negative eigenvalue {bad:e}"
            )));
        }
        let keep: Vec<usize> = (0..dim).filter(|&k| values[k] > 0.0).collect();
        let weights = keep.iter().map(|&k| values[k]).collect();
        let vectors = vectors.select_columns(keep.iter());
        Ok(FockDensityMatrix {
            modes,
            cutoff,
            weights,
            vectors,
        })
    }
}

fn check_cutoff(cutoff: usize) -> Result<()> {
    if cutoff < 2 {
        return Err(Error::Domain(format!("cutoff must be at least 2, got {cutoff}")));
    }
    if cutoff > MAX_CUTOFF {
        return Err(Error::Truncation(format!(
            "cutoff {cutoff} exceeds the oracle cap {MAX_CUTOFF}"
        )));
    }
    Ok(())
}

/// `p_k = n̄^k / (n̄+1)^{k+1}` for `k < cutoff`.
fn thermal_populations(nbar: f64, cutoff: usize) -> Vec<f64> {
    let ratio = nbar / (nbar + 1.0);
    let mut p = 1.0 / (nbar + 1.0);
    (0..cutoff)
        .map(|_| {
            let out = p;
            p *= ratio;
            out
        })
        .collect()
}

pub fn thermal_density(nbar: f64, cutoff: usize) -> Result<FockDensityMatrix> {
    check_cutoff(cutoff)?;
    if !nbar.is_finite() || nbar < 0.0 {
        return Err(Error::Domain(format!("mean photon number must be non-negative, got {nbar}")));
    }
    let p = thermal_populations(nbar, cutoff);
    let keep: Vec<usize> = (0..cutoff).filter(|&k| p[k] > 0.0).collect();
    let vectors = DMatrix::from_fn(cutoff, keep.len(), |r, c| {
        if r == keep[c] {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(FockDensityMatrix {
        modes: 1,
        cutoff,
        weights: keep.iter().map(|&k| p[k]).collect(),
        vectors,
    })
}

/// Parameter range in which the oracle is trusted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleEnvelope {
    pub max_symplectic_eigenvalue: f64,
    pub max_squeezing: f64,
    /// Largest acceptable `1 − Tr ρ` after truncation.
    pub max_deficit: f64,
}

impl Default for OracleEnvelope {
    fn default() -> Self {
        OracleEnvelope {
            max_symplectic_eigenvalue: 11.0,
            max_squeezing: 1.5,
            max_deficit: 1e-2,
        }
    }
}

/// Builds the truncated density matrix of a one- or two-mode Gaussian state.
///
/// With `A = Sᵀ D S`, the state is `U(Sᵀ) ρ_th U(Sᵀ)†` where `ρ_th` is the
/// thermal state with `2n̄ⱼ + 1 = dⱼ` and `U(Sᵀ)` is assembled from the Euler
/// factors of `Sᵀ`. Each thermal eigencomponent `|k⟩` is mapped separately.
pub fn gaussian_density(
    a: &CorrelationMatrix,
    cutoff: usize,
    envelope: &OracleEnvelope,
    tol: &Tolerances,
) -> Result<FockDensityMatrix> {
    check_cutoff(cutoff)?;
    let modes = a.modes();
    if modes > 2 {
        return Err(Error::Truncation(format!(
            "the Fock oracle supports at most two modes, got {modes}"
        )));
    }
    let w = williamson(a, tol)?;
    if w.d[0] > envelope.max_symplectic_eigenvalue {
        return Err(Error::Truncation(format!(
            "symplectic eigenvalue {} exceeds the oracle bound {}",
            w.d[0], envelope.max_symplectic_eigenvalue
        )));
    }

    let populations: Vec<Vec<f64>> = w
        .d
        .iter()
        .map(|d| thermal_populations(((d - 1.0) / 2.0).max(0.0), cutoff))
        .collect();
    let mut components: Vec<(Vec<usize>, f64)> = match modes {
        1 => (0..cutoff).map(|k| (vec![k], populations[0][k])).collect(),
        _ => (0..cutoff)
            .flat_map(|i| (0..cutoff).map(move |j| (i, j)))
            .map(|(i, j)| (vec![i, j], populations[0][i] * populations[1][j]))
            .collect(),
    };
    let heaviest = components.iter().fold(0.0f64, |m, c| m.max(c.1));
    components.retain(|c| c.1 > WEIGHT_FLOOR * heaviest);
    let max_total = components
        .iter()
        .map(|c| c.0.iter().sum::<usize>())
        .max()
        .unwrap_or(0);

    let unitary = GaussianUnitary::new(&w.s.transpose(), cutoff, max_total, tol)?;
    if let Some(r) = unitary
        .squeezing
        .iter()
        .find(|r| r.abs() > envelope.max_squeezing + 1e-9)
    {
        return Err(Error::Truncation(format!(
            "squeezing r = {r} exceeds the oracle bound {}",
            envelope.max_squeezing
        )));
    }

    let dim = cutoff.pow(modes as u32);
    let mut vectors = CMat::zeros(dim, components.len());
    for (c, (k, _)) in components.iter().enumerate() {
        let v: DVector<Complex64> = unitary.column(k);
        vectors.set_column(c, &v);
    }
    let rho = FockDensityMatrix {
        modes,
        cutoff,
        weights: components.iter().map(|c| c.1).collect(),
        vectors,
    };
    let deficit = rho.deficit();
    if deficit > envelope.max_deficit {
        return Err(Error::Truncation(format!(
            "cutoff {cutoff} loses {deficit:e} of the state (allowed {:e})",
            envelope.max_deficit
        )));
    }
    Ok(rho)
}
