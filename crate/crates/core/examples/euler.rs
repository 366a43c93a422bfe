//! Euler (Bloch-Messiah) factorization of a symplectic matrix into passive
//! rotations and single-mode squeezers.

use gaussfid::gaussian::{euler_decompose, standard_form, symplectic_residual};
use gaussfid::Tolerances;
use nalgebra::DMatrix;

fn main() -> gaussfid::Result<()> {
    let tol = Tolerances::default();
    let n = 2;
    // exp(J·K) for a symmetric K is symplectic
    let k = DMatrix::from_row_slice(
        4,
        4,
        &[0.4, 0.1, 0.0, 0.2, 0.1, -0.3, 0.1, 0.0, 0.0, 0.1, 0.2, -0.1, 0.2, 0.0, -0.1, 0.1],
    );
    let s = (standard_form(n)?.into_matrix() * k).exp();
    println!("S ={s}");
    println!("|SᵀJS − J| = {:e}", symplectic_residual(&s)?);

    let e = euler_decompose(&s, &tol)?;
    println!("squeezing factors m = {:?}", e.m);
    println!("O ={}", e.o);
    println!("O' ={}", e.o_prime);
    println!("|O·Z·O' − S| = {:e}", e.reconstruction_residual);
    Ok(())
}
