//! Ingestion from whitespace-separated decimal text.

use std::fs;
use std::path::Path;

use super::error::{DatasetError, Result};
use super::matrix::StateMatrix;

/// Parses exactly `rows * cols` numbers in row-major order.
///
/// Error locations are 1-based matrix coordinates of the offending value.
pub fn parse_text_matrix(
    source_id: &str,
    text: &str,
    rows: usize,
    cols: usize,
) -> Result<StateMatrix> {
    if rows == 0 || cols == 0 {
        return Err(DatasetError::InvalidShape {
            rows: rows as u64,
            cols: cols as u64,
        });
    }
    let expected = rows * cols;
    let mut values = Vec::with_capacity(expected);
    let mut seen = 0usize;
    for (i, token) in text.split_whitespace().enumerate() {
        seen += 1;
        if i >= expected {
            continue;
        }
        let v: f32 = token.parse().map_err(|_| DatasetError::Parse {
            row: i / cols + 1,
            col: i % cols + 1,
            token: token.to_owned(),
        })?;
        values.push(v);
    }
    if seen != expected {
        return Err(DatasetError::CountMismatch {
            expected,
            actual: seen,
        });
    }
    StateMatrix::new(source_id, rows, cols, values)
}

pub fn import_text_matrix(path: impl AsRef<Path>, rows: usize, cols: usize) -> Result<StateMatrix> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| DatasetError::io(path, e))?;
    let source_id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    parse_text_matrix(&source_id, &text, rows, cols)
}
