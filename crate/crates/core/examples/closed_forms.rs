//! The general formula against the one-mode and thermal closed forms, and the
//! intermediates of the general route.

use gaussfid::fidelity::{fidelity_general, fidelity_one_mode, fidelity_thermal, select_method};
use gaussfid::gaussian::{squeezed_thermal_state, thermal_state};
use gaussfid::Tolerances;

fn main() -> gaussfid::Result<()> {
    let tol = Tolerances::default();

    let a1 = squeezed_thermal_state(&[0.3], &[0.9], &[0.0], &tol)?;
    let a2 = squeezed_thermal_state(&[1.2], &[0.2], &[1.0], &tol)?;
    let b = fidelity_general(&a1, &a2, &tol)?;
    println!("one mode, auto-selected {:?}", select_method(&a1, &a2));
    println!("  general  {:.15}", b.fidelity);
    println!("  one-mode {:.15}", fidelity_one_mode(&a1, &a2, &tol)?);
    println!("  L = {}, det Φ(𝒪) = {}, Im 𝒪 residue = {:e}", b.l, b.det_phi_o, b.o_imag_residue);
    println!("  𝒪 ={}", b.o);

    let t1 = thermal_state(&[0.5, 1.0, 2.0], &tol)?;
    let t2 = thermal_state(&[1.0, 0.0, 3.0], &tol)?;
    println!("three thermal modes, auto-selected {:?}", select_method(&t1, &t2));
    println!("  general {:.15}", fidelity_general(&t1, &t2, &tol)?.fidelity);
    println!("  thermal {:.15}", fidelity_thermal(&t1, &t2, &tol)?);
    Ok(())
}
