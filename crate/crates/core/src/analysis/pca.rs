#![allow(clippy::needless_range_loop)]

use std::fmt::Write as _;

use super::jacobi::jacobi_eigen;
use super::patterns::PatternVector;
use super::AnalysisError;

/// Entries within this distance of the largest magnitude count as tied when
/// fixing component signs; the first tied entry is made positive.
pub const SIGN_TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PcaProjection {
    /// `n x k` projected coordinates, in input order.
    pub coordinates: Vec<Vec<f64>>,
    /// Top-`k` principal axes, each of length `D`.
    pub components: Vec<Vec<f64>>,
    pub eigenvalues: Vec<f64>,
    pub explained_variance_ratio: Vec<f64>,
    pub mean: Vec<f64>,
    pub labels: Vec<Option<String>>,
}

impl PcaProjection {
    /// `label,x1,..,xk` with a header row.
    pub fn to_csv(&self) -> String {
        let k = self.components.len();
        let mut out = String::from("label");
        for i in 1..=k {
            write!(out, ",x{i}").unwrap();
        }
        out.push('\n');
        for (label, coords) in self.labels.iter().zip(&self.coordinates) {
            out.push_str(&csv_field(label.as_deref().unwrap_or("")));
            for x in coords {
                write!(out, ",{x}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Flips `v` so its first largest-magnitude entry is positive.
pub fn apply_sign_convention(v: &mut [f64]) {
    let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if let Some(lead) = v.iter().position(|x| x.abs() >= max - SIGN_TIE_TOLERANCE) {
        if v[lead] < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// Projects mean-centered pattern vectors onto the top `k` eigenvectors of
/// their sample covariance (divisor `n - 1`).
pub fn pca_project(vectors: &[PatternVector], k: usize) -> Result<PcaProjection, AnalysisError> {
    let n = vectors.len();
    if n < 2 {
        return Err(AnalysisError::TooFewVectors(n));
    }
    let dims = vectors[0].bits.len();
    if let Some(v) = vectors.iter().find(|v| v.bits.len() != dims) {
        return Err(AnalysisError::DimensionMismatch {
            expected: dims,
            actual: v.bits.len(),
        });
    }
    if k == 0 || k > dims {
        return Err(AnalysisError::InvalidComponents { k, dims });
    }

    let mut mean = vec![0.0; dims];
    for v in vectors {
        for (m, &b) in mean.iter_mut().zip(&v.bits) {
            *m += b as f64;
        }
    }
    mean.iter_mut().for_each(|m| *m /= n as f64);
    let centered: Vec<Vec<f64>> = vectors
        .iter()
        .map(|v| v.bits.iter().zip(&mean).map(|(&b, m)| b as f64 - m).collect())
        .collect();

    let mut cov = vec![vec![0.0; dims]; dims];
    for row in &centered {
        for i in 0..dims {
            if row[i] == 0.0 {
                continue;
            }
            for j in i..dims {
                cov[i][j] += row[i] * row[j];
            }
        }
    }
    for i in 0..dims {
        for j in i..dims {
            cov[i][j] /= (n - 1) as f64;
            cov[j][i] = cov[i][j];
        }
    }
    let total: f64 = (0..dims).map(|i| cov[i][i]).sum();
    let labels = vectors.iter().map(|v| v.label.clone()).collect();

    if total <= 0.0 {
        // every vector identical: nothing to project
        let mut components = vec![vec![0.0; dims]; k];
        for (i, c) in components.iter_mut().enumerate() {
            c[i] = 1.0;
        }
        return Ok(PcaProjection {
            coordinates: vec![vec![0.0; k]; n],
            components,
            eigenvalues: vec![0.0; k],
            explained_variance_ratio: vec![0.0; k],
            mean,
            labels,
        });
    }

    let eigen = jacobi_eigen(&cov);
    let mut components: Vec<Vec<f64>> = eigen.vectors.into_iter().take(k).collect();
    components.iter_mut().for_each(|c| apply_sign_convention(c));
    let eigenvalues: Vec<f64> = eigen.values.into_iter().take(k).map(|l| l.max(0.0)).collect();
    let explained_variance_ratio = eigenvalues.iter().map(|l| l / total).collect();
    let coordinates = centered
        .iter()
        .map(|row| {
            components
                .iter()
                .map(|c| c.iter().zip(row).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();

    Ok(PcaProjection {
        coordinates,
        components,
        eigenvalues,
        explained_variance_ratio,
        mean,
        labels,
    })
}
