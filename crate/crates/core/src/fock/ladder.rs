//! Multi-index bookkeeping and ladder operators on a box of `cutoff^modes`
//! number states. Mode 0 is the most significant index.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::FockDensityMatrix;
use crate::linalg::RMat;

pub(crate) fn flat(index: &[usize], cutoff: usize) -> usize {
    index.iter().fold(0, |acc, &j| acc * cutoff + j)
}

pub(crate) fn unflat(mut flat: usize, modes: usize, cutoff: usize) -> Vec<usize> {
    let mut out = vec![0; modes];
    for slot in out.iter_mut().rev() {
        *slot = flat % cutoff;
        flat /= cutoff;
    }
    out
}

/// `a_mode v` and `a†_mode v` for `v` in the box of side `cutoff`, returned
/// in the box of side `cutoff + 1` so that no amplitude is lost.
fn lowered_raised(
    v: &DVector<Complex64>,
    mode: usize,
    modes: usize,
    cutoff: usize,
) -> (DVector<Complex64>, DVector<Complex64>) {
    let big = cutoff + 1;
    let len = big.pow(modes as u32);
    let mut lower = DVector::zeros(len);
    let mut raise = DVector::zeros(len);
    for (i, amp) in v.iter().enumerate() {
        if *amp == Complex64::new(0.0, 0.0) {
            continue;
        }
        let mut idx = unflat(i, modes, cutoff);
        let k = idx[mode];
        if k > 0 {
            idx[mode] = k - 1;
            lower[flat(&idx, big)] += amp * (k as f64).sqrt();
        }
        idx[mode] = k + 1;
        raise[flat(&idx, big)] += amp * ((k + 1) as f64).sqrt();
    }
    (lower, raise)
}

/// Vacuum-normalized second moments `A_ij = Tr(ρ {R_i, R_j}) / Tr ρ` with
/// `R = (q₁…qₙ, p₁…pₙ)`, `q = (a + a†)/√2`, `p = (a − a†)/(i√2)`.
///
/// Quadratures are applied to each eigencomponent of `ρ` exactly (into a box
/// one larger), so the result is the exact moment matrix of the truncated
/// state.
pub fn second_moments(rho: &FockDensityMatrix) -> RMat {
    let (modes, cutoff) = (rho.modes(), rho.cutoff());
    let dim = 2 * modes;
    let mut acc = DMatrix::<f64>::zeros(dim, dim);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let minus_i = Complex64::new(0.0, -1.0);
    for (w, v) in rho.components() {
        let mut quads = Vec::with_capacity(dim);
        let mut momenta = Vec::with_capacity(modes);
        for m in 0..modes {
            let (lo, hi) = lowered_raised(&v.clone_owned(), m, modes, cutoff);
            quads.push((&lo + &hi) * Complex64::new(s, 0.0));
            momenta.push((&lo - &hi) * (minus_i * s));
        }
        quads.extend(momenta);
        for i in 0..dim {
            for j in i..dim {
                let val = 2.0 * w * quads[i].dotc(&quads[j]).re;
                acc[(i, j)] += val;
                if i != j {
                    acc[(j, i)] += val;
                }
            }
        }
    }
    acc / rho.trace()
}
