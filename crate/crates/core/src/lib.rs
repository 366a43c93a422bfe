//! Uhlmann fidelity between zero-mean multimode Gaussian states.
//!
//! States are described by their correlation matrices (vacuum = identity,
//! coordinates ordered `q₁…qₙ, p₁…pₙ`). The crate provides
//!
//! * [`gaussian`]: validation, Williamson and Euler decompositions, and the
//!   correlation matrix `Φ(A)` of the square root of a state;
//! * [`fidelity`]: the general multimode fidelity formula, its one-mode and
//!   thermal closed forms, and Gaussian trace overlaps;
//! * [`fock`]: a brute-force truncated Fock-space oracle used to check all of
//!   the above independently;
//! * [`state_file`] and [`commands`]: the TOML state format and the command
//!   implementations behind the `gaussfid` binary.
//!
//! Runnable walkthroughs live in `examples/`; try
//! `cargo run --example vacuum_vs_thermal`.

pub mod commands;
pub mod error;
pub mod fidelity;
pub mod fock;
pub mod gaussian;
pub mod linalg;
pub mod state_file;
pub mod tolerances;

pub use error::{Error, Result};
pub use gaussian::CorrelationMatrix;
pub use tolerances::Tolerances;
