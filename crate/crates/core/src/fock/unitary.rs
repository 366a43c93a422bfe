//! Truncated Gaussian unitaries: single-mode squeezers and passive
//! (number-conserving) transformations, plus their composition following an
//! Euler factorization `M = O · (Z ⊕ Z⁻¹) · O′`.
//!
//! Conventions: `U(M)` satisfies `U† R U = M R` for `R = (q…, p…)`, so that
//! `U(M₁M₂) = U(M₁)U(M₂)` and `U ρ U†` has correlation matrix `M A Mᵀ`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::ladder::{flat, unflat};
use crate::error::{Error, Result};
use crate::gaussian::euler_decompose;
use crate::linalg::{herm_eigen_sorted, CMat, RMat};
use crate::tolerances::Tolerances;

/// Largest vacuum-column norm deficit accepted from [`squeeze_unitary`].
pub const MAX_LEAKAGE: f64 = 1e-3;

/// Largest `|r|` the truncated squeezer is trusted for.
pub const MAX_SQUEEZE: f64 = 3.0;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// The retained `N × N` block of a unitary together with how much norm each
/// column lost to the discarded levels.
#[derive(Debug, Clone)]
pub struct TruncatedUnitary {
    pub matrix: CMat,
    pub column_deficits: Vec<f64>,
}

impl TruncatedUnitary {
    /// Norm deficit of the vacuum column, `1 − ‖Π U|0⟩‖²`.
    pub fn leakage(&self) -> f64 {
        self.column_deficits[0]
    }
}

/// `exp(½(ξ* a² − ξ a†²))` with `ξ = r·e^{iθ}`.
///
/// The exponential is taken of the generator truncated at a working
/// dimension `2N + 20` and the leading `N × N` block is returned, which keeps
/// the retained matrix elements accurate; the lost column norm is reported.
pub fn squeeze_unitary(r: f64, theta: f64, cutoff: usize) -> Result<TruncatedUnitary> {
    if cutoff < 2 {
        return Err(Error::Domain(format!("cutoff must be at least 2, got {cutoff}")));
    }
    if !r.is_finite() || r.abs() > MAX_SQUEEZE {
        return Err(Error::Truncation(format!(
            "squeezing |r| = {} exceeds the oracle bound {MAX_SQUEEZE}",
            r.abs()
        )));
    }
    let work = 2 * cutoff + 20;
    let xi = Complex64::from_polar(r, theta);
    let mut gen = CMat::zeros(work, work);
    for n in 2..work {
        let amp = ((n * (n - 1)) as f64).sqrt() * 0.5;
        gen[(n - 2, n)] = xi.conj() * amp;
        gen[(n, n - 2)] = -xi * amp;
    }
    let full = gen.exp();
    let matrix = full.view((0, 0), (cutoff, cutoff)).into_owned();
    let column_deficits: Vec<f64> = matrix
        .column_iter()
        .map(|c| 1.0 - c.norm_squared())
        .collect();
    let out = TruncatedUnitary {
        matrix,
        column_deficits,
    };
    if out.leakage() > MAX_LEAKAGE {
        return Err(Error::Truncation(format!(
            "squeezing r = {r} leaks {:e} of the vacuum beyond cutoff {cutoff}",
            out.leakage()
        )));
    }
    Ok(out)
}

/// A passive unitary `exp(−i Σ G_jk a_j† a_k)` acting on a box of side `side`.
/// Two-mode transforms act on fixed-total-number blocks, each exponentiated
/// separately; blocks beyond `max_total` are dropped.
#[derive(Debug, Clone)]
pub(crate) enum Passive {
    OneMode { phase: f64 },
    TwoMode { side: usize, blocks: Vec<(usize, CMat)> },
}

impl Passive {
    /// From an orthogonal symplectic `O = [[P, Q], [−Q, P]]`; the mode
    /// transformation is `w = P − iQ = e^{−iG}`.
    pub(crate) fn new(o: &RMat, side: usize, max_total: usize) -> Result<Passive> {
        let n = o.nrows() / 2;
        let w = CMat::from_fn(n, n, |r, c| Complex64::new(o[(r, c)], -o[(r, c + n)]));
        match n {
            1 => Ok(Passive::OneMode {
                phase: -w[(0, 0)].arg(),
            }),
            2 => {
                let g = unitary_generator(&w)?;
                let blocks = (0..=max_total.min(2 * (side - 1)))
                    .map(|total| block_unitary(&g, total, side))
                    .collect();
                Ok(Passive::TwoMode { side, blocks })
            }
            _ => Err(Error::Truncation(format!(
                "the Fock oracle supports at most two modes, got {n}"
            ))),
        }
    }

    pub(crate) fn apply(&self, v: &DVector<Complex64>) -> DVector<Complex64> {
        match self {
            Passive::OneMode { phase } => DVector::from_iterator(
                v.len(),
                v.iter()
                    .enumerate()
                    .map(|(k, z)| z * Complex64::from_polar(1.0, -phase * k as f64)),
            ),
            Passive::TwoMode { side, blocks } => {
                let mut out = DVector::zeros(v.len());
                for (total, (lo, u)) in blocks.iter().enumerate() {
                    let len = u.nrows();
                    let gather = DVector::from_fn(len, |i, _| v[flat(&[lo + i, total - lo - i], *side)]);
                    if gather.iter().all(|z| *z == ZERO) {
                        continue;
                    }
                    let moved = u * gather;
                    for (i, z) in moved.iter().enumerate() {
                        out[flat(&[lo + i, total - lo - i], *side)] = *z;
                    }
                }
                out
            }
        }
    }
}

/// Hermitian `G` with `w = e^{−iG}` for a unitary `w`.
///
/// `w` is normal, so it is diagonalized by the eigenvectors of the Hermitian
/// combination `Re w + c·Im w` for a generic real `c`.
fn unitary_generator(w: &CMat) -> Result<CMat> {
    let herm_re = (w + w.adjoint()) * Complex64::new(0.5, 0.0);
    let herm_im = (w - w.adjoint()) * Complex64::new(0.0, -0.5);
    let mix = &herm_re + &herm_im * Complex64::new(0.618_033_988_749_894_8, 0.0);
    let (_, v) = herm_eigen_sorted(&mix);
    let diag = v.adjoint() * w * &v;
    let off = diag
        .iter()
        .enumerate()
        .filter(|(i, _)| i % (w.nrows() + 1) != 0)
        .fold(0.0f64, |acc, (_, z)| acc.max(z.norm()));
    if off > 1e-10 {
        return Err(Error::DecompositionFailure {
            what: "passive mode transformation diagonalization",
            residual: off,
            allowed: 1e-10,
        });
    }
    let angles = DMatrix::from_fn(w.nrows(), w.nrows(), |r, c| {
        if r == c {
            Complex64::new(-diag[(r, r)].arg(), 0.0)
        } else {
            ZERO
        }
    });
    Ok(&v * angles * v.adjoint())
}

/// `exp(−i H)` for `H = Σ G_jk a_j† a_k` restricted to the states
/// `|j, total − j⟩` inside a box of side `side`.
fn block_unitary(g: &CMat, total: usize, side: usize) -> (usize, CMat) {
    let lo = total.saturating_sub(side - 1);
    let hi = total.min(side - 1);
    let len = hi - lo + 1;
    let mut h = CMat::zeros(len, len);
    for i in 0..len {
        let j = (lo + i) as f64;
        let rest = total as f64 - j;
        h[(i, i)] = g[(0, 0)] * j + g[(1, 1)] * rest;
        if i + 1 < len {
            // a₁†a₂ : |j, K−j⟩ → √(j+1)√(K−j) |j+1, K−j−1⟩
            h[(i + 1, i)] = g[(0, 1)] * ((j + 1.0) * rest).sqrt();
        }
        if i > 0 {
            // a₂†a₁ : |j, K−j⟩ → √j √(K−j+1) |j−1, K−j+1⟩
            h[(i - 1, i)] = g[(1, 0)] * (j * (rest + 1.0)).sqrt();
        }
    }
    (lo, (h * Complex64::new(0.0, -1.0)).exp())
}

/// The Fock representation of a symplectic `M` on a box of side `cutoff`.
pub(crate) struct GaussianUnitary {
    modes: usize,
    cutoff: usize,
    work: usize,
    first: Passive,
    squeezers: Vec<CMat>,
    last: Passive,
    /// `ln` of the Euler squeezing factors.
    pub(crate) squeezing: Vec<f64>,
}

impl GaussianUnitary {
    /// `max_input_total` bounds the total photon number of the number states
    /// the unitary will be applied to.
    pub(crate) fn new(
        m: &RMat,
        cutoff: usize,
        max_input_total: usize,
        tol: &Tolerances,
    ) -> Result<GaussianUnitary> {
        let modes = m.nrows() / 2;
        let euler = euler_decompose(m, tol)?;
        let squeezing: Vec<f64> = euler.m.iter().map(|x| x.ln()).collect();
        if let Some(r) = squeezing.iter().find(|r| r.abs() > MAX_SQUEEZE) {
            return Err(Error::Truncation(format!(
                "squeezing r = {r} exceeds the oracle bound {MAX_SQUEEZE}"
            )));
        }
        let work = if modes == 1 { cutoff } else { cutoff + 20 };
        let first = Passive::new(&euler.o_prime, work, max_input_total)?;
        let last = Passive::new(&euler.o, work, 2 * (cutoff - 1))?;
        // U(Z) for Z = diag(m, 1/m) is the squeezer with r = −ln m
        let squeezers = squeezing
            .iter()
            .map(|r| squeeze_unitary(-r, 0.0, work).map(|u| u.matrix))
            .collect::<Result<_>>()?;
        Ok(GaussianUnitary {
            modes,
            cutoff,
            work,
            first,
            squeezers,
            last,
            squeezing,
        })
    }

    /// `Π U |k⟩` in the box of side `cutoff`.
    pub(crate) fn column(&self, k: &[usize]) -> DVector<Complex64> {
        let len = self.work.pow(self.modes as u32);
        let mut v = DVector::zeros(len);
        v[flat(k, self.work)] = Complex64::new(1.0, 0.0);
        let v = self.first.apply(&v);
        let v = match self.modes {
            1 => &self.squeezers[0] * v,
            _ => {
                // vector as a matrix indexed (j₁, j₂): S₁ V S₂ᵀ
                let mat = DMatrix::from_fn(self.work, self.work, |a, b| v[a * self.work + b]);
                let out = &self.squeezers[0] * mat * self.squeezers[1].transpose();
                DVector::from_fn(len, |i, _| out[(i / self.work, i % self.work)])
            }
        };
        let v = self.last.apply(&v);
        let out_len = self.cutoff.pow(self.modes as u32);
        DVector::from_fn(out_len, |i, _| {
            let idx = unflat(i, self.modes, self.cutoff);
            v[flat(&idx, self.work)]
        })
    }
}
