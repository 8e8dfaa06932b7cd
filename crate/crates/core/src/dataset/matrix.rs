use super::error::{DatasetError, Result};

/// A `T x D` series of hidden-state activations for one source, stored
/// row-major by timestep.
#[derive(Debug, Clone, PartialEq)]
pub struct StateMatrix {
    source_id: String,
    num_timesteps: usize,
    num_states: usize,
    values: Vec<f32>,
}

impl StateMatrix {
    /// Builds a matrix from row-major values, rejecting empty shapes and
    /// non-finite entries.
    pub fn new(
        source_id: impl Into<String>,
        num_timesteps: usize,
        num_states: usize,
        values: Vec<f32>,
    ) -> Result<Self> {
        if num_timesteps == 0 || num_states == 0 {
            return Err(DatasetError::InvalidShape {
                rows: num_timesteps as u64,
                cols: num_states as u64,
            });
        }
        let expected = num_timesteps
            .checked_mul(num_states)
            .ok_or(DatasetError::InvalidShape {
                rows: num_timesteps as u64,
                cols: num_states as u64,
            })?;
        if values.len() != expected {
            return Err(DatasetError::CountMismatch {
                expected,
                actual: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(DatasetError::NonFiniteValue {
                row: i / num_states,
                col: i % num_states,
                value: values[i],
            });
        }
        Ok(Self {
            source_id: source_id.into(),
            num_timesteps,
            num_states,
            values,
        })
    }

    /// Builds a matrix from per-timestep rows.
    pub fn from_rows(source_id: impl Into<String>, rows: &[Vec<f32>]) -> Result<Self> {
        let t = rows.len();
        let d = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != d) {
            return Err(DatasetError::CountMismatch {
                expected: d,
                actual: bad.len(),
            });
        }
        Self::new(source_id, t, d, rows.concat())
    }

    /// Builds a matrix from per-state columns (`columns[c][t]`).
    pub fn from_columns(source_id: impl Into<String>, columns: &[Vec<f32>]) -> Result<Self> {
        let d = columns.len();
        let t = columns.first().map_or(0, Vec::len);
        if let Some(bad) = columns.iter().find(|c| c.len() != t) {
            return Err(DatasetError::CountMismatch {
                expected: t,
                actual: bad.len(),
            });
        }
        let mut values = Vec::with_capacity(t * d);
        for step in 0..t {
            values.extend(columns.iter().map(|col| col[step]));
        }
        Self::new(source_id, t, d, values)
    }

    pub fn source_id(&self) -> &str {
        &self.source_id
    }

    pub fn set_source_id(&mut self, source_id: impl Into<String>) {
        self.source_id = source_id.into();
    }

    pub fn num_timesteps(&self) -> usize {
        self.num_timesteps
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn values(&self) -> &[f32] {
        &self.values
    }

    #[inline]
    pub fn get(&self, t: usize, c: usize) -> f32 {
        self.values[t * self.num_states + c]
    }

    #[inline]
    pub fn row(&self, t: usize) -> &[f32] {
        let start = t * self.num_states;
        &self.values[start..start + self.num_states]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f32]> {
        self.values.chunks_exact(self.num_states)
    }

    /// Values of one state over time.
    pub fn column(&self, c: usize) -> impl Iterator<Item = f32> + '_ {
        self.values.iter().skip(c).step_by(self.num_states).copied()
    }

    /// Largest activation in the matrix.
    pub fn max_value(&self) -> f32 {
        self.values.iter().copied().fold(f32::NEG_INFINITY, f32::max)
    }

    pub fn min_value(&self) -> f32 {
        self.values.iter().copied().fold(f32::INFINITY, f32::min)
    }

    pub fn into_values(self) -> Vec<f32> {
        self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        let err = StateMatrix::new("h", 2, 2, vec![0.0, 1.0, f32::NAN, 2.0]).unwrap_err();
        assert!(matches!(
            err,
            DatasetError::NonFiniteValue { row: 1, col: 0, .. }
        ));
        let err = StateMatrix::new("h", 1, 1, vec![f32::INFINITY]).unwrap_err();
        assert_eq!(err.kind(), "NonFiniteValue");
    }

    #[test]
    fn rejects_empty_shape() {
        assert!(matches!(
            StateMatrix::new("h", 0, 3, vec![]),
            Err(DatasetError::InvalidShape { .. })
        ));
    }

    #[test]
    fn columns_and_rows_agree() {
        let m = StateMatrix::from_columns("h", &[vec![0.1, 0.2, 0.3], vec![1.0, 2.0, 3.0]]).unwrap();
        assert_eq!(m.num_timesteps(), 3);
        assert_eq!(m.num_states(), 2);
        assert_eq!(m.row(1), &[0.2, 2.0]);
        assert_eq!(m.column(1).collect::<Vec<_>>(), vec![1.0, 2.0, 3.0]);
        let r = StateMatrix::from_rows("h", &[vec![0.1, 1.0], vec![0.2, 2.0], vec![0.3, 3.0]]).unwrap();
        assert_eq!(m, r);
    }
}
