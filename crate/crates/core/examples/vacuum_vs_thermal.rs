//! Fidelity between the vacuum and thermal states of increasing temperature.
//!
//! ```text
//! cargo run --example vacuum_vs_thermal
//! ```

use gaussfid::fidelity::{fidelity, sqrt_fidelity};
use gaussfid::gaussian::thermal_state;
use gaussfid::Tolerances;

fn main() -> gaussfid::Result<()> {
    let tol = Tolerances::default();
    let vacuum = thermal_state(&[0.0], &tol)?;
    println!("{:>6} {:>14} {:>14} {:>14}", "nbar", "F", "sqrt F", "1/(nbar+1)");
    for nbar in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0] {
        let hot = thermal_state(&[nbar], &tol)?;
        println!(
            "{nbar:>6} {:>14.12} {:>14.12} {:>14.12}",
            fidelity(&vacuum, &hot, &tol)?,
            sqrt_fidelity(&vacuum, &hot, &tol)?,
            1.0 / (nbar + 1.0)
        );
    }
    Ok(())
}
