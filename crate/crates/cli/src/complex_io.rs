//! JSON input format for finite equivariant complexes.
//!
//! ```json
//! {
//!   "p": 3,
//!   "degrees": [
//!     { "dim": 3, "d": [[1, 1, 1]], "g": [[0,0,1],[1,0,0],[0,1,0]] },
//!     { "dim": 1, "g": [[1]] }
//!   ]
//! }
//! ```
//!
//! `d` maps degree `k` into degree `k + 1` (rows indexed by the target
//! basis) and is omitted in the top degree; `g` is the action of the
//! group generator in each degree.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use dm_cohomology::equivariant_cochains::{FiniteGComplex, GradedPiece};
use dm_cohomology::fp_linalg::FpMatrix;

use crate::CliError;

#[derive(Deserialize)]
struct ComplexDto {
    p: u64,
    degrees: Vec<DegreeDto>,
}

#[derive(Deserialize)]
struct DegreeDto {
    dim: usize,
    #[serde(default)]
    d: Option<Vec<Vec<i64>>>,
    g: Vec<Vec<i64>>,
}

fn matrix_from(
    rows: &[Vec<i64>],
    expected_rows: usize,
    expected_cols: usize,
    p: u64,
) -> Result<FpMatrix, CliError> {
    // an empty row list is fine when either dimension is zero
    if rows.is_empty() {
        return FpMatrix::zeros(expected_rows, expected_cols, p)
            .map_err(|e| CliError::Usage(e.to_string()));
    }
    let m = FpMatrix::from_rows(rows, p).map_err(|e| CliError::Usage(e.to_string()))?;
    if m.rows() != expected_rows || m.cols() != expected_cols {
        return Err(CliError::Usage(format!(
            "matrix is {}x{}, expected {expected_rows}x{expected_cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

pub fn read_complex(path: &Path) -> Result<FiniteGComplex, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let dto: ComplexDto = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed complex JSON: {e}")))?;
    let mut pieces = Vec::with_capacity(dto.degrees.len());
    for (k, degree) in dto.degrees.iter().enumerate() {
        let g = matrix_from(&degree.g, degree.dim, degree.dim, dto.p)?;
        let d = match &degree.d {
            Some(rows) => {
                let next_dim = dto.degrees.get(k + 1).map(|q| q.dim).ok_or_else(|| {
                    CliError::Usage(format!(
                        "degree {k} has a differential but no degree {}",
                        k + 1
                    ))
                })?;
                Some(matrix_from(rows, next_dim, degree.dim, dto.p)?)
            }
            None => None,
        };
        pieces.push(GradedPiece {
            dim: degree.dim,
            d,
            g,
        });
    }
    FiniteGComplex::new(dto.p, pieces).map_err(|e| CliError::Usage(e.to_string()))
}
