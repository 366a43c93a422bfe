//! Fidelity between Gaussian states.
//!
//! Throughout, "fidelity" is the Uhlmann transition probability
//! `F = [Tr √(√ρ₁ ρ₂ √ρ₁)]²`; [`sqrt_fidelity`] gives its square root.
//!
//! The general route forms the correlation matrix `𝒪` of
//! `√ρ₁ ρ₂ √ρ₁` from `Φ(A₁)` and `A₂` with complex arithmetic, then
//! `F = √(L · det Φ(𝒪))` with `L = det((A₁+A₂)/2)⁻¹`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gaussian::{self, j_matrix, CorrelationMatrix};
use crate::linalg::{inverse_c, log_det_complex, log_det_spd, max_abs, to_complex, CMat, RMat, I};
use crate::tolerances::Tolerances;

/// Every intermediate of the general formula.
#[derive(Debug, Clone, PartialEq)]
pub struct FidelityBreakdown {
    /// `Φ(A₁)`.
    pub phi1: RMat,
    /// `𝒰 = (A₂ − iJ)(Φ(A₁) + A₂)⁻¹(A₂ + iJ)`.
    pub u: CMat,
    /// `𝒪`, symmetrized, real part.
    pub o: RMat,
    /// Largest imaginary entry discarded from `𝒪`.
    pub o_imag_residue: f64,
    /// `L = det((A₁+A₂)/2)⁻¹`.
    pub l: f64,
    pub det_phi_o: f64,
    pub fidelity: f64,
}

/// Which formula produced a fidelity value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    General,
    OneMode,
    Thermal,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::General => "general",
            Method::OneMode => "one-mode",
            Method::Thermal => "thermal",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Method::General),
            "one-mode" => Ok(Method::OneMode),
            "thermal" => Ok(Method::Thermal),
            other => Err(Error::Domain(format!("unknown method {other:?}"))),
        }
    }
}

fn same_modes(a1: &CorrelationMatrix, a2: &CorrelationMatrix) -> Result<usize> {
    if a1.modes() != a2.modes() {
        return Err(Error::Domain(format!(
            "mode count mismatch: {} vs {}",
            a1.modes(),
            a2.modes()
        )));
    }
    Ok(a1.modes())
}

fn clamp_unit(f: f64, tol: &Tolerances) -> f64 {
    if (f - 1.0).abs() < tol.fid {
        1.0
    } else {
        f
    }
}

/// `Tr ρ₁ρ₂ = det((A₁+A₂)/2)^{−1/2}`.
pub fn overlap(a1: &CorrelationMatrix, a2: &CorrelationMatrix) -> Result<f64> {
    same_modes(a1, a2)?;
    let mean = (a1.matrix() + a2.matrix()) * 0.5;
    Ok((-0.5 * log_det_spd(&mean)?).exp())
}

/// `Tr ρ₁ρ₂ρ₃` from the characteristic function of the product `ρ₁ρ₂`:
/// `[det((A₁+A₂)/2) · det((A₂ + A₃ − (A₂+iJ)(A₁+A₂)⁻¹(A₂−iJ))/2)]^{−1/2}`,
/// principal branch. The signs of `iJ` belong to the `(q, p)` ordering;
/// swapping them conjugates the result.
pub fn triple_overlap(
    a1: &CorrelationMatrix,
    a2: &CorrelationMatrix,
    a3: &CorrelationMatrix,
) -> Result<Complex64> {
    let n = same_modes(a1, a2)?;
    same_modes(a2, a3)?;
    let j = to_complex(&j_matrix(n));
    let sum12 = a1.matrix() + a2.matrix();
    let first = log_det_spd(&(&sum12 * 0.5))?;
    let a2c = to_complex(a2.matrix());
    let inv12 = to_complex(
        &sum12
            .try_inverse()
            .ok_or(Error::Conditioning {
                condition: f64::INFINITY,
                limit: f64::MAX,
            })?,
    );
    let product = (&a2c + &j * I) * inv12 * (&a2c - &j * I);
    let inner = (&a2c + to_complex(a3.matrix()) - product) * Complex64::new(0.5, 0.0);
    let second = log_det_complex(&inner)?;
    let total = second + first;
    Ok((total * -0.5).exp())
}

/// The general multimode formula, with all intermediates.
pub fn fidelity_general(
    a1: &CorrelationMatrix,
    a2: &CorrelationMatrix,
    tol: &Tolerances,
) -> Result<FidelityBreakdown> {
    let n = same_modes(a1, a2)?;
    let j = to_complex(&j_matrix(n));
    let ij = &j * I;

    let sqrt1 = gaussian::phi(a1, tol)?;
    let phi1 = sqrt1.phi;
    let phi1c = to_complex(&phi1);
    let a2c = to_complex(a2.matrix());

    let sum = &phi1 + a2.matrix();
    let sum_inv = sum.clone().cholesky().map(|c| c.inverse()).ok_or(Error::Conditioning {
        condition: f64::INFINITY,
        limit: tol.max_condition,
    })?;
    let u = (&a2c - &ij) * to_complex(&sum_inv) * (&a2c + &ij);
    let inner = to_complex(&sum) - &u;
    let inner_inv = inverse_c(&inner)?;
    let o_complex = &phi1c - (&phi1c - &ij) * inner_inv * (&phi1c + &ij);
    let o_sym = (&o_complex + o_complex.transpose()) * Complex64::new(0.5, 0.0);
    let o: RMat = o_sym.map(|z| z.re);
    let o_imag_residue = o_sym.iter().fold(0.0f64, |acc, z| acc.max(z.im.abs()));
    let allowed = tol.imag * max_abs(&o);
    if o_imag_residue > allowed {
        return Err(Error::NumericalConsistency {
            what: "𝒪",
            residue: o_imag_residue,
            allowed,
        });
    }

    let o_state = gaussian::validate(o.clone(), tol)?;
    let phi_o = gaussian::phi(&o_state, tol)?;
    let mean = (a1.matrix() + a2.matrix()) * 0.5;
    let log_l = -log_det_spd(&mean)?;
    let fidelity = clamp_unit((0.5 * (log_l + phi_o.log_det_phi)).exp(), tol);

    Ok(FidelityBreakdown {
        phi1,
        u,
        o,
        o_imag_residue,
        l: log_l.exp(),
        det_phi_o: phi_o.det_phi(),
        fidelity,
    })
}

fn det2(m: &RMat) -> f64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// One-mode closed form `F = 2 / (√(det(A₁+A₂) + 𝒫) − √𝒫)` with
/// `𝒫 = (det A₁ − 1)(det A₂ − 1)`.
pub fn fidelity_one_mode(
    a1: &CorrelationMatrix,
    a2: &CorrelationMatrix,
    tol: &Tolerances,
) -> Result<f64> {
    if a1.modes() != 1 || a2.modes() != 1 {
        return Err(Error::Domain(format!(
            "one-mode formula needs single-mode states, got {} and {} modes",
            a1.modes(),
            a2.modes()
        )));
    }
    let det_sum = det2(&(a1.matrix() + a2.matrix()));
    // det A − 1 ≈ 2(d − 1); pure inputs are snapped so that roundoff is not
    // amplified by √𝒫
    let excess = |a: &CorrelationMatrix| {
        let e = det2(a.matrix()) - 1.0;
        if e <= 2.0 * tol.pure {
            0.0
        } else {
            e
        }
    };
    let p = excess(a1) * excess(a2);
    // 2/(√(s+𝒫) − √𝒫) rationalized to avoid cancellation for large 𝒫
    let f = 2.0 * ((det_sum + p).sqrt() + p.sqrt()) / det_sum;
    Ok(clamp_unit(f, tol))
}

/// Thermal closed form, a product over modes of
/// `2 / (a·b + 1 − √((a²−1)(b²−1)))` for per-mode values `a`, `b`.
pub fn fidelity_thermal(
    a1: &CorrelationMatrix,
    a2: &CorrelationMatrix,
    tol: &Tolerances,
) -> Result<f64> {
    same_modes(a1, a2)?;
    let (Some(d1), Some(d2)) = (a1.thermal_diagonal(), a2.thermal_diagonal()) else {
        return Err(Error::Domain(
            "thermal formula needs diagonal inputs of the form diag(d, d); \
             Williamson-normalize first"
                .into(),
        ));
    };
    let log_f: f64 = d1
        .iter()
        .zip(&d2)
        .map(|(&a, &b)| {
            let root = ((a * a - 1.0).max(0.0) * (b * b - 1.0).max(0.0)).sqrt();
            // a·b + 1 − root = (a + b)² / (a·b + 1 + root)
            let denom = (a + b).powi(2) / (a * b + 1.0 + root);
            (2.0 / denom).ln()
        })
        .sum();
    Ok(clamp_unit(log_f.exp(), tol))
}

/// Picks the cheapest applicable formula: one-mode, thermal, else general.
pub fn select_method(a1: &CorrelationMatrix, a2: &CorrelationMatrix) -> Method {
    if a1.modes() == 1 && a2.modes() == 1 {
        Method::OneMode
    } else if a1.is_thermal_form() && a2.is_thermal_form() {
        Method::Thermal
    } else {
        Method::General
    }
}

pub fn fidelity_with(
    a1: &CorrelationMatrix,
    a2: &CorrelationMatrix,
    method: Method,
    tol: &Tolerances,
) -> Result<f64> {
    match method {
        Method::General => Ok(fidelity_general(a1, a2, tol)?.fidelity),
        Method::OneMode => fidelity_one_mode(a1, a2, tol),
        Method::Thermal => fidelity_thermal(a1, a2, tol),
    }
}

pub fn fidelity(a1: &CorrelationMatrix, a2: &CorrelationMatrix, tol: &Tolerances) -> Result<f64> {
    same_modes(a1, a2)?;
    fidelity_with(a1, a2, select_method(a1, a2), tol)
}

/// `√F = Tr √(√ρ₁ ρ₂ √ρ₁)`.
pub fn sqrt_fidelity(a1: &CorrelationMatrix, a2: &CorrelationMatrix, tol: &Tolerances) -> Result<f64> {
    fidelity(a1, a2, tol).map(f64::sqrt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::{squeezed_thermal_state, thermal_state, validate};
    use approx::assert_relative_eq;

    const TOL: Tolerances = Tolerances::DEFAULT;

    fn th(nbar: &[f64]) -> CorrelationMatrix {
        thermal_state(nbar, &TOL).unwrap()
    }

    fn sq(nbar: f64, r: f64, theta: f64) -> CorrelationMatrix {
        squeezed_thermal_state(&[nbar], &[r], &[theta], &TOL).unwrap()
    }

    #[test]
    fn overlap_values() {
        assert_relative_eq!(overlap(&th(&[0.0]), &th(&[0.0])).unwrap(), 1.0, epsilon = 1e-15);
        assert_relative_eq!(overlap(&th(&[1.0]), &th(&[1.0])).unwrap(), 1.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(overlap(&th(&[0.0]), &th(&[1.0])).unwrap(), 0.5, epsilon = 1e-15);
        assert!(overlap(&th(&[0.0]), &th(&[0.0, 0.0])).is_err());
    }

    #[test]
    fn triple_overlap_thermal() {
        let vac = th(&[0.0]);
        let t = triple_overlap(&vac, &vac, &vac).unwrap();
        assert_relative_eq!(t.re, 1.0, epsilon = 1e-14);
        assert!(t.im.abs() < 1e-14);
        // Σ_k p_k³ with p_k = (1/2)^{k+1} sums to 1/7
        let brute: f64 = (0..200).map(|k| 0.5f64.powi(k + 1).powi(3)).sum();
        let t3 = th(&[1.0]);
        let t = triple_overlap(&t3, &t3, &t3).unwrap();
        assert_relative_eq!(t.re, brute, epsilon = 1e-13);
        assert_relative_eq!(brute, 1.0 / 7.0, epsilon = 1e-15);
    }

    #[test]
    fn self_fidelity_and_o_matrix() {
        let a = th(&[1.0]);
        let b = fidelity_general(&a, &a, &TOL).unwrap();
        assert_eq!(b.fidelity, 1.0);
        // 𝒪 = (A + A⁻¹)/2 = (3 + 1/3)/2 = 5/3
        assert!(max_abs(&(&b.o - RMat::identity(2, 2) * (5.0 / 3.0))) < 1e-12);
    }

    #[test]
    fn pure_first_argument_gives_o_equal_a1() {
        let a1 = sq(0.0, 0.7, 0.4);
        let a2 = sq(1.3, -0.2, 1.9);
        let b = fidelity_general(&a1, &a2, &TOL).unwrap();
        assert!(max_abs(&(&b.o - a1.matrix())) < 1e-10);
        assert_relative_eq!(b.det_phi_o, 1.0, epsilon = 1e-9);
        assert_relative_eq!(b.fidelity, overlap(&a1, &a2).unwrap(), epsilon = 1e-10);
    }

    #[test]
    fn vacuum_vs_thermal() {
        let b = fidelity_general(&th(&[0.0]), &th(&[1.0]), &TOL).unwrap();
        assert_relative_eq!(b.fidelity, 0.5, epsilon = 1e-12);
        assert_relative_eq!(b.l, 0.25, epsilon = 1e-14);
    }

    #[test]
    fn squeezed_vacuum_vs_vacuum() {
        let f = fidelity_general(&sq(0.0, 1.0, 0.0), &th(&[0.0]), &TOL).unwrap().fidelity;
        assert_relative_eq!(f, 1.0 / 1f64.cosh(), epsilon = 1e-12);
        assert_relative_eq!(f, 0.6480542736638855, epsilon = 1e-12);
    }

    #[test]
    fn one_mode_values() {
        assert_eq!(fidelity_one_mode(&th(&[0.0]), &th(&[0.0]), &TOL).unwrap(), 1.0);
        let f = fidelity_one_mode(&th(&[1.0]), &th(&[2.0]), &TOL).unwrap();
        let expected = 2.0 / (16.0 - 8.0 * 3f64.sqrt());
        assert_relative_eq!(f, expected, epsilon = 1e-14);
        assert_relative_eq!(expected, 1.0 / (6f64.sqrt() - 2f64.sqrt()).powi(2), epsilon = 1e-14);
        assert_relative_eq!(f, 0.9330127018922193, epsilon = 1e-14);
        assert_relative_eq!(
            fidelity_one_mode(&th(&[0.0]), &th(&[1.0]), &TOL).unwrap(),
            0.5,
            epsilon = 1e-15
        );
        assert!(matches!(
            fidelity_one_mode(&th(&[0.0, 0.0]), &th(&[0.0, 0.0]), &TOL),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn thermal_values() {
        assert_eq!(fidelity_thermal(&th(&[1.0]), &th(&[1.0]), &TOL).unwrap(), 1.0);
        let one = 2.0 / (16.0 - 8.0 * 3f64.sqrt());
        let f = fidelity_thermal(&th(&[1.0, 1.0]), &th(&[2.0, 2.0]), &TOL).unwrap();
        assert_relative_eq!(f, one * one, epsilon = 1e-14);
        assert_relative_eq!(f, 0.8705127018922193, epsilon = 1e-13);
        let nbar = [0.5, 1.0, 3.0];
        let f = fidelity_thermal(&th(&[0.0; 3]), &th(&nbar), &TOL).unwrap();
        let expected: f64 = nbar.iter().map(|n| 1.0 / (n + 1.0)).product();
        assert_relative_eq!(f, expected, epsilon = 1e-14);
        assert!(matches!(
            fidelity_thermal(&sq(0.0, 0.5, 0.0), &th(&[0.0]), &TOL),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dispatch_routes() {
        let (a, b) = (sq(0.3, 0.5, 0.2), sq(1.0, -0.1, 0.0));
        assert_eq!(select_method(&a, &b), Method::OneMode);
        assert_eq!(fidelity(&a, &b, &TOL).unwrap(), fidelity_one_mode(&a, &b, &TOL).unwrap());
        let (c, d) = (th(&[1.0, 0.5]), th(&[0.2, 2.0]));
        assert_eq!(select_method(&c, &d), Method::Thermal);
        assert_eq!(fidelity(&c, &d, &TOL).unwrap(), fidelity_thermal(&c, &d, &TOL).unwrap());
        let e = squeezed_thermal_state(&[0.1, 0.2], &[0.3, 0.1], &[0.0, 1.0], &TOL).unwrap();
        assert_eq!(select_method(&e, &d), Method::General);
        assert_eq!(
            fidelity(&e, &d, &TOL).unwrap(),
            fidelity_general(&e, &d, &TOL).unwrap().fidelity
        );
        assert!(fidelity(&a, &c, &TOL).is_err());
    }

    #[test]
    fn general_agrees_with_closed_forms() {
        let (a, b) = (sq(0.3, 0.5, 0.2), sq(1.0, -0.1, 1.3));
        let g = fidelity_general(&a, &b, &TOL).unwrap().fidelity;
        assert_relative_eq!(g, fidelity_one_mode(&a, &b, &TOL).unwrap(), epsilon = 1e-10);
        let (c, d) = (th(&[1.0, 0.5]), th(&[0.2, 2.0]));
        let g = fidelity_general(&c, &d, &TOL).unwrap().fidelity;
        assert_relative_eq!(g, fidelity_thermal(&c, &d, &TOL).unwrap(), epsilon = 1e-10);
    }

    #[test]
    fn sqrt_fidelity_is_root() {
        let v = validate(RMat::identity(2, 2), &TOL).unwrap();
        assert_relative_eq!(sqrt_fidelity(&v, &th(&[1.0]), &TOL).unwrap(), 0.5f64.sqrt(), epsilon = 1e-15);
    }
}
