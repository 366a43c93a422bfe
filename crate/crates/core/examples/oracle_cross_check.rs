//! Closed-form fidelity against a brute-force truncated Fock-space computation.
//!
//! The oracle builds each density matrix from number states with truncated
//! squeeze and passive unitaries and evaluates the Uhlmann formula
//! numerically. Increasing the cutoff shows the truncation error shrinking.

use gaussfid::fidelity::fidelity;
use gaussfid::fock::{gaussian_density, second_moments, uhlmann_fidelity_numeric, OracleEnvelope};
use gaussfid::gaussian::{squeezed_thermal_state, thermal_state};
use gaussfid::Tolerances;

fn main() -> gaussfid::Result<()> {
    let tol = Tolerances::default();
    let env = OracleEnvelope::default();
    let a1 = squeezed_thermal_state(&[0.0], &[1.0], &[0.0], &tol)?;
    let a2 = thermal_state(&[1.0], &tol)?;
    let exact = fidelity(&a1, &a2, &tol)?;
    println!("formula: {exact:.15}");
    for cutoff in [10, 20, 40, 60, 80] {
        match gaussian_density(&a1, cutoff, &env, &tol) {
            Ok(rho1) => {
                let rho2 = gaussian_density(&a2, cutoff, &env, &tol)?;
                let f = uhlmann_fidelity_numeric(&rho1, &rho2)?;
                println!(
                    "cutoff {cutoff:>3}: oracle {f:.15}  |Δ| = {:.2e}  1 − Tr ρ₁ = {:.2e}",
                    (f - exact).abs(),
                    rho1.deficit()
                );
            }
            Err(e) => println!("cutoff {cutoff:>3}: {e}"),
        }
    }
    let rho = gaussian_density(&a1, 60, &env, &tol)?;
    println!("moments measured in Fock space ={}", second_moments(&rho));
    println!("target A ={}", a1.matrix());
    Ok(())
}
