//! TOML description of a Gaussian state.
//!
//! ```toml
//! kind = "squeezed_thermal"
//! nbar = [0.5]
//! r = [1.0]
//! theta = [0.0]
//! ```
//!
//! Other kinds are `explicit` (`matrix`, a list of rows in `(q₁..qₙ, p₁..pₙ)`
//! order), `thermal` (`nbar`) and `composite` (`[[parts]]` tensored in order,
//! then an optional symplectic `transform` applied as `SᵀAS`). Angles are in
//! radians.

use std::path::Path;

use nalgebra::DMatrix;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::gaussian::{conjugate, squeezed_thermal_state, tensor, thermal_state, validate, CorrelationMatrix};
use crate::linalg::RMat;
use crate::tolerances::Tolerances;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StateSpec {
    Explicit {
        matrix: Vec<Vec<f64>>,
    },
    Thermal {
        nbar: Vec<f64>,
    },
    SqueezedThermal {
        nbar: Vec<f64>,
        r: Vec<f64>,
        theta: Vec<f64>,
    },
    Composite {
        parts: Vec<StateSpec>,
        #[serde(default)]
        transform: Option<Vec<Vec<f64>>>,
    },
}

fn matrix_from_rows(rows: &[Vec<f64>], what: &str) -> Result<RMat> {
    let size = rows.len();
    if size == 0 || !size.is_multiple_of(2) {
        return Err(Error::InvalidDimension(format!(
            "{what} must have an even, non-zero number of rows, got {size}"
        )));
    }
    if let Some(row) = rows.iter().find(|r| r.len() != size) {
        return Err(Error::InvalidDimension(format!(
            "{what} must be square: found a row of length {} in a {size}-row matrix",
            row.len()
        )));
    }
    Ok(DMatrix::from_fn(size, size, |i, j| rows[i][j]))
}

impl StateSpec {
    pub fn from_toml_str(text: &str) -> Result<StateSpec> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<StateSpec> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Builds and validates the correlation matrix.
    pub fn resolve(&self, tol: &Tolerances) -> Result<CorrelationMatrix> {
        match self {
            StateSpec::Explicit { matrix } => validate(matrix_from_rows(matrix, "matrix")?, tol),
            StateSpec::Thermal { nbar } => thermal_state(nbar, tol),
            StateSpec::SqueezedThermal { nbar, r, theta } => {
                squeezed_thermal_state(nbar, r, theta, tol)
            }
            StateSpec::Composite { parts, transform } => {
                let mut resolved = parts.iter().map(|p| p.resolve(tol));
                let first = resolved
                    .next()
                    .ok_or_else(|| Error::InvalidDimension("composite state has no parts".into()))??;
                let joined = resolved.try_fold(first, |acc, p| Ok::<_, Error>(tensor(&acc, &p?)))?;
                match transform {
                    None => Ok(joined),
                    Some(rows) => conjugate(&joined, &matrix_from_rows(rows, "transform")?, tol),
                }
            }
        }
    }
}
