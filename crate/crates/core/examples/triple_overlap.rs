//! `Tr ρ₁ρ₂ρ₃` from correlation matrices, checked against the Fock oracle.

use gaussfid::fidelity::triple_overlap;
use gaussfid::fock::{gaussian_density, trace_product_numeric, OracleEnvelope};
use gaussfid::gaussian::squeezed_thermal_state;
use gaussfid::Tolerances;

fn main() -> gaussfid::Result<()> {
    let tol = Tolerances::default();
    let states = [
        squeezed_thermal_state(&[0.3], &[0.6], &[0.4], &tol)?,
        squeezed_thermal_state(&[0.5], &[0.2], &[1.3], &tol)?,
        squeezed_thermal_state(&[0.1], &[0.5], &[-0.7], &tol)?,
    ];
    let [a, b, c] = &states;
    println!("t123 = {}", triple_overlap(a, b, c)?);
    println!("t231 = {}", triple_overlap(b, c, a)?);
    println!("t312 = {}", triple_overlap(c, a, b)?);
    println!("t321 = {}", triple_overlap(c, b, a)?);

    let env = OracleEnvelope::default();
    let rhos = states
        .iter()
        .map(|s| gaussian_density(s, 60, &env, &tol))
        .collect::<gaussfid::Result<Vec<_>>>()?;
    println!("oracle Tr ρ₁ρ₂ρ₃ = {}", trace_product_numeric(&[&rhos[0], &rhos[1], &rhos[2]])?);
    Ok(())
}
