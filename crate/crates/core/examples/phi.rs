//! Correlation matrix Φ(A) of √ρ and the defining equation Φ − JΦ⁻¹J = 2A.

use gaussfid::gaussian::{phi, phi_residual, squeezed_thermal_state, thermal_state};
use gaussfid::Tolerances;

fn main() -> gaussfid::Result<()> {
    let tol = Tolerances::default();
    for (label, a) in [
        ("thermal nbar=1", thermal_state(&[1.0], &tol)?),
        ("squeezed thermal", squeezed_thermal_state(&[0.4], &[0.8], &[0.3], &tol)?),
        ("squeezed vacuum", squeezed_thermal_state(&[0.0], &[0.8], &[0.3], &tol)?),
    ] {
        let p = phi(&a, &tol)?;
        println!("{label}:");
        println!("  Φ ={}", p.phi);
        println!("  det Φ = {}, K = {}", p.det_phi(), p.k);
        println!("  |Φ − JΦ⁻¹J − 2A| = {:e}", phi_residual(&a, &p.phi));
    }
    // 3 + 2√2 solves φ + 1/φ = 6
    println!("thermal nbar=1 expects Φ = {}·I", 3.0 + 2.0 * 2f64.sqrt());
    Ok(())
}
