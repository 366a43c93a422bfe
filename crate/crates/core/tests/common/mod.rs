#![allow(dead_code)]

use gaussfid::gaussian::{conjugate, thermal_state, validate, CorrelationMatrix};
use gaussfid::Tolerances;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type RMat = DMatrix<f64>;

pub const TOL: Tolerances = Tolerances::DEFAULT;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller
    let u: f64 = rng.random_range(f64::EPSILON..1.0);
    let v: f64 = rng.random();
    (-2.0 * u.ln()).sqrt() * (std::f64::consts::TAU * v).cos()
}

/// Haar-ish random unitary from the QR factorization of a complex Ginibre matrix.
pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(n, n, |_, _| Complex64::new(gaussian(rng), gaussian(rng)));
    let qr = g.qr();
    let (q, r) = (qr.q(), qr.r());
    let phases = DVector::from_fn(n, |k, _| {
        let d = r[(k, k)];
        if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) }
    });
    DMatrix::from_fn(n, n, |i, j| q[(i, j)] * phases[j])
}

/// Orthogonal symplectic matrix `[[X, −Y], [Y, X]]` from a unitary `X + iY`.
pub fn random_passive(rng: &mut ChaCha8Rng, n: usize) -> RMat {
    let u = random_unitary(rng, n);
    DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = u[(i % n, j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    })
}

/// `O · (M ⊕ M⁻¹) · O′` with squeezing `ln mⱼ ∈ [−max_r, max_r]`.
pub fn random_symplectic(rng: &mut ChaCha8Rng, n: usize, max_r: f64) -> RMat {
    let squeeze: Vec<f64> = (0..n).map(|_| rng.random_range(-max_r..=max_r)).collect();
    let z = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        if i != j {
            0.0
        } else if i < n {
            squeeze[i].exp()
        } else {
            (-squeeze[i - n]).exp()
        }
    });
    random_passive(rng, n) * z * random_passive(rng, n)
}

/// `Sᵀ (D ⊕ D) S` with `dⱼ ∈ [1, max_d]` and random `S`.
pub fn random_state(rng: &mut ChaCha8Rng, n: usize, max_d: f64, max_r: f64) -> CorrelationMatrix {
    let nbar: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..=(max_d - 1.0) / 2.0)).collect();
    let thermal = thermal_state(&nbar, &TOL).unwrap();
    let s = random_symplectic(rng, n, max_r);
    conjugate(&thermal, &s, &TOL).unwrap()
}

pub fn random_pure_state(rng: &mut ChaCha8Rng, n: usize, max_r: f64) -> CorrelationMatrix {
    let s = random_symplectic(rng, n, max_r);
    validate(s.transpose() * s, &TOL).unwrap()
}

/// `diag(d, d)` with `d = 2n̄ + 1`.
pub fn random_thermal(rng: &mut ChaCha8Rng, n: usize, max_nbar: f64) -> CorrelationMatrix {
    let nbar: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..=max_nbar)).collect();
    thermal_state(&nbar, &TOL).unwrap()
}

pub fn max_abs(m: &RMat) -> f64 {
    m.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}
