//! The `validate`, `fidelity` and `decompose` commands.
//!
//! Each command renders its whole report into a [`Report`] so the binary
//! only prints and exits; tests call [`run`] directly.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::fidelity::{fidelity_general, fidelity_with, select_method, Method};
use crate::fock::{gaussian_density, uhlmann_fidelity_numeric, OracleEnvelope};
use crate::gaussian::{euler_decompose, is_pure, williamson, CorrelationMatrix};
use crate::linalg::{CMat, RMat};
use crate::state_file::StateSpec;
use crate::tolerances::Tolerances;

#[derive(Debug, Parser)]
#[command(name = "gaussfid", version, about = "Fidelity of Gaussian states from correlation matrices")]
pub struct Cli {
    /// TOML file overriding numerical tolerances.
    #[arg(long, global = true, value_name = "FILE")]
    pub tolerances: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a state file describes a physical Gaussian state.
    Validate { file: PathBuf },
    /// Fidelity between two states.
    Fidelity {
        file_a: PathBuf,
        file_b: PathBuf,
        /// auto, general, one-mode or thermal.
        #[arg(long, default_value = "auto")]
        method: String,
        /// Print the intermediates of the general formula.
        #[arg(long)]
        breakdown: bool,
        /// Cross-check against a truncated Fock-space computation at this cutoff.
        #[arg(long, value_name = "N")]
        verify: Option<usize>,
    },
    /// Williamson and Euler decompositions.
    Decompose { file: PathBuf },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => EXIT_PARSE,
        Error::Truncation(_) => EXIT_ORACLE,
        _ => EXIT_DOMAIN,
    }
}

/// Shortest round-trip form, switching to scientific notation for very
/// large or small magnitudes.
pub fn format_number(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || !x.is_finite() || (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Twelve significant digits.
pub fn format_sig12(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 {
        return "0.00000000000".into();
    }
    if !(1e-4..1e12).contains(&a) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - a.log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Twelve significant digits with trailing zeros dropped, for summaries.
pub fn format_short(x: f64) -> String {
    let s = format_sig12(x);
    let (mantissa, exponent) = match s.find('e') {
        Some(k) => s.split_at(k),
        None => (s.as_str(), ""),
    };
    let mantissa = if mantissa.contains('.') {
        mantissa.trim_end_matches('0').trim_end_matches('.')
    } else {
        mantissa
    };
    format!("{mantissa}{exponent}")
}

fn format_list(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format_number(*v)).collect();
    format!("({})", parts.join(", "))
}

fn format_short_list(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format_short(*v)).collect();
    format!("({})", parts.join(", "))
}

fn write_matrix(out: &mut String, name: &str, m: &RMat) {
    let _ = writeln!(out, "{name}:");
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(|v| format_number(*v)).collect();
        let _ = writeln!(out, "  [{}]", cells.join(", "));
    }
}

fn write_complex_matrix(out: &mut String, name: &str, m: &CMat) {
    let _ = writeln!(out, "{name}:");
    for row in m.row_iter() {
        let cells: Vec<String> = row
            .iter()
            .map(|z| {
                let sign = if z.im.is_sign_negative() { '-' } else { '+' };
                format!("{}{sign}{}i", format_number(z.re), format_number(z.im.abs()))
            })
            .collect();
        let _ = writeln!(out, "  [{}]", cells.join(", "));
    }
}

fn load_state(path: &Path, tol: &Tolerances) -> Result<CorrelationMatrix> {
    StateSpec::load(path)?.resolve(tol)
}

pub fn load_tolerances(path: &Path) -> Result<Tolerances> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn run(cli: &Cli) -> Report {
    let tol = match &cli.tolerances {
        None => Tolerances::default(),
        Some(path) => match load_tolerances(path) {
            Ok(t) => t,
            Err(e) => return failure(String::new(), &e),
        },
    };
    match &cli.command {
        Command::Validate { file } => validate(file, &tol),
        Command::Fidelity {
            file_a,
            file_b,
            method,
            breakdown,
            verify,
        } => {
            let mut out = String::new();
            match fidelity(&mut out, file_a, file_b, method, *breakdown, *verify, &tol) {
                Ok(()) => Report {
                    stdout: out,
                    ..Report::default()
                },
                Err(e) => failure(out, &e),
            }
        }
        Command::Decompose { file } => {
            let mut out = String::new();
            match decompose(&mut out, file, &tol) {
                Ok(()) => Report {
                    stdout: out,
                    ..Report::default()
                },
                Err(e) => failure(out, &e),
            }
        }
    }
}

fn failure(stdout: String, err: &Error) -> Report {
    Report {
        stdout,
        stderr: format!("error: {err}\n"),
        code: exit_code(err),
    }
}

pub fn validate(file: &Path, tol: &Tolerances) -> Report {
    let a = match load_state(file, tol) {
        Ok(a) => a,
        Err(e @ Error::Parse(_)) => return failure(String::new(), &e),
        Err(e) => return failure(format!("invalid: {}\n", e.kind()), &e),
    };
    let w = match williamson(&a, tol) {
        Ok(w) => w,
        Err(e) => return failure(format!("invalid: {}\n", e.kind()), &e),
    };
    let pure = is_pure(&a, tol);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "valid: {}, d={}",
        if pure { "pure" } else { "mixed" },
        format_short_list(&w.d)
    );
    let _ = writeln!(out, "modes: {}", a.modes());
    let _ = writeln!(out, "symplectic eigenvalues: {}", format_list(&w.d));
    let _ = writeln!(out, "pure: {pure}");
    let _ = writeln!(out, "det A: {}", format_number(a.det()));
    Report {
        stdout: out,
        ..Report::default()
    }
}

fn fidelity(
    out: &mut String,
    file_a: &Path,
    file_b: &Path,
    method: &str,
    breakdown: bool,
    verify: Option<usize>,
    tol: &Tolerances,
) -> Result<()> {
    let a1 = load_state(file_a, tol)?;
    let a2 = load_state(file_b, tol)?;
    if a1.modes() != a2.modes() {
        return Err(Error::Domain(format!(
            "mode count mismatch: {} vs {}",
            a1.modes(),
            a2.modes()
        )));
    }
    let method = match method {
        "auto" => select_method(&a1, &a2),
        other => other.parse::<Method>()?,
    };
    let f = fidelity_with(&a1, &a2, method, tol)?;
    let _ = writeln!(out, "method: {}", method.name());
    let _ = writeln!(out, "fidelity: {}", format_sig12(f));
    let _ = writeln!(out, "sqrt fidelity: {}", format_sig12(f.sqrt()));
    let _ = writeln!(out, "fidelity (full): {}", format_number(f));

    if breakdown {
        let b = fidelity_general(&a1, &a2, tol)?;
        write_matrix(out, "phi(A1)", &b.phi1);
        write_complex_matrix(out, "U", &b.u);
        write_matrix(out, "O", &b.o);
        let _ = writeln!(out, "O imaginary residue: {}", format_number(b.o_imag_residue));
        let _ = writeln!(out, "L: {}", format_number(b.l));
        let _ = writeln!(out, "det phi(O): {}", format_number(b.det_phi_o));
        let _ = writeln!(out, "general fidelity: {}", format_number(b.fidelity));
    }

    if let Some(cutoff) = verify {
        let env = OracleEnvelope::default();
        let rho1 = gaussian_density(&a1, cutoff, &env, tol)?;
        let rho2 = gaussian_density(&a2, cutoff, &env, tol)?;
        let numeric = uhlmann_fidelity_numeric(&rho1, &rho2)?;
        let _ = writeln!(out, "oracle cutoff: {cutoff}");
        let _ = writeln!(out, "oracle fidelity: {}", format_number(numeric));
        let _ = writeln!(
            out,
            "oracle trace deficits: {}",
            format_list(&[rho1.deficit(), rho2.deficit()])
        );
        let _ = writeln!(out, "discrepancy: {}", format_number((numeric - f).abs()));
    }
    Ok(())
}

fn decompose(out: &mut String, file: &Path, tol: &Tolerances) -> Result<()> {
    let a = load_state(file, tol)?;
    let w = williamson(&a, tol)?;
    let _ = writeln!(out, "modes: {}", a.modes());
    let _ = writeln!(out, "d: {}", format_list(&w.d));
    write_matrix(out, "S", &w.s);
    let _ = writeln!(
        out,
        "williamson reconstruction residual: {}",
        format_number(w.reconstruction_residual)
    );
    let _ = writeln!(out, "williamson symplectic residual: {}", format_number(w.symplectic_residual));
    let e = euler_decompose(&w.s, tol)?;
    let _ = writeln!(out, "m: {}", format_list(&e.m));
    write_matrix(out, "O", &e.o);
    write_matrix(out, "O'", &e.o_prime);
    let _ = writeln!(
        out,
        "euler reconstruction residual: {}",
        format_number(e.reconstruction_residual)
    );
    Ok(())
}
