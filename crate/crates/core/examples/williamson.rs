//! Williamson normal form of a two-mode state.

use gaussfid::gaussian::{conjugate, squeezed_thermal_state, tensor, thermal_state, williamson};
use gaussfid::Tolerances;
use nalgebra::DMatrix;

fn main() -> gaussfid::Result<()> {
    let tol = Tolerances::default();
    let (s, c) = 0.5f64.sin_cos();
    let mixer = DMatrix::from_row_slice(
        4,
        4,
        &[c, s, 0.0, 0.0, -s, c, 0.0, 0.0, 0.0, 0.0, c, s, 0.0, 0.0, -s, c],
    );
    let a = conjugate(
        &tensor(
            &squeezed_thermal_state(&[0.5], &[0.7], &[0.2], &tol)?,
            &thermal_state(&[1.5], &tol)?,
        ),
        &mixer,
        &tol,
    )?;
    println!("A ={}", a.matrix());

    let w = williamson(&a, &tol)?;
    println!("symplectic eigenvalues: {:?}", w.d);
    println!("S ={}", w.s);
    println!("|SᵀDS − A| = {:e}", w.reconstruction_residual);
    println!("|SᵀJS − J| = {:e}", w.symplectic_residual);
    Ok(())
}
