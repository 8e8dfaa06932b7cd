//! PCA checked against an eigendecomposition from nalgebra.

mod common;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use statescope::analysis::{pca_project, PatternVector};

fn random_patterns(seed: u64, n: usize, d: usize) -> Vec<PatternVector> {
    let mut r = common::rng(seed);
    let p: Vec<f64> = (0..d).map(|_| r.gen_range(0.1..0.9)).collect();
    (0..n)
        .map(|_| PatternVector {
            bits: p.iter().map(|&pi| r.gen_bool(pi) as u8).collect(),
            label: None,
        })
        .collect()
}

/// Reference projection via nalgebra's symmetric eigensolver on the
/// explicitly built covariance. Returns (coords n x k, eigenvalues desc).
fn reference(vectors: &[PatternVector], k: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = vectors.len();
    let d = vectors[0].bits.len();
    let x = DMatrix::from_fn(n, d, |i, j| vectors[i].bits[j] as f64);
    let mean = x.row_mean();
    let centered = DMatrix::from_fn(n, d, |i, j| x[(i, j)] - mean[j]);
    let cov = centered.transpose() * &centered / (n as f64 - 1.0);
    let eig = SymmetricEigen::new(cov);
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let mut coords = vec![vec![0.0; k]; n];
    for (col, &idx) in order.iter().take(k).enumerate() {
        let mut v: Vec<f64> = eig.eigenvectors.column(idx).iter().copied().collect();
        let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let lead = v.iter().position(|x| x.abs() >= max - 1e-9).unwrap();
        if v[lead] < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        for (i, row) in coords.iter_mut().enumerate() {
            row[col] = (0..d).map(|j| centered[(i, j)] * v[j]).sum();
        }
    }
    (coords, order.iter().map(|&i| eig.eigenvalues[i]).collect())
}

fn well_separated(values: &[f64], k: usize) -> bool {
    (0..k).all(|i| {
        let gap_prev = if i == 0 { f64::INFINITY } else { values[i - 1] - values[i] };
        let gap_next = values.get(i + 1).map_or(f64::INFINITY, |v| values[i] - v);
        gap_prev.min(gap_next) > 1e-3
    })
}

#[test]
fn coordinates_match_reference() {
    let mut compared = 0;
    for seed in 0..40u64 {
        let d = 2 + (seed as usize % 9);
        let n = 5 + (seed as usize * 7) % 90;
        let vectors = random_patterns(seed, n, d);
        let k = 2.min(d);
        let (ref_coords, ref_vals) = reference(&vectors, k);
        let got = pca_project(&vectors, k).unwrap();
        for (a, b) in got.eigenvalues.iter().zip(&ref_vals) {
            assert!((a - b.max(0.0)).abs() < 1e-9);
        }
        if !well_separated(&ref_vals, k) {
            continue;
        }
        compared += 1;
        for (g, r) in got.coordinates.iter().zip(&ref_coords) {
            for (x, y) in g.iter().zip(r) {
                assert!((x - y).abs() < 1e-6, "seed {seed}: {x} vs {y}");
            }
        }
    }
    assert!(compared >= 30, "only {compared} datasets had separated spectra");
}

#[test]
fn full_rank_ratios_sum_to_one() {
    for seed in 0..10u64 {
        let vectors = random_patterns(100 + seed, 40, 6);
        let p = pca_project(&vectors, 6).unwrap();
        let total: f64 = p.explained_variance_ratio.iter().sum();
        assert!((total - 1.0).abs() < 1e-6);
    }
}

#[test]
fn reordering_inputs_permutes_rows() {
    let vectors = random_patterns(9, 30, 5);
    let mut reversed = vectors.clone();
    reversed.reverse();
    let a = pca_project(&vectors, 2).unwrap();
    let b = pca_project(&reversed, 2).unwrap();
    for (i, row) in a.coordinates.iter().enumerate() {
        let other = &b.coordinates[vectors.len() - 1 - i];
        for (x, y) in row.iter().zip(other) {
            assert!((x - y).abs() < 1e-9);
        }
    }
}

#[test]
fn reconstruction_error_is_optimal() {
    // residual after projecting onto k axes equals the sum of the discarded
    // eigenvalues times (n - 1), the minimum over rank-k linear maps
    for seed in 0..10u64 {
        let d = 4 + seed as usize % 6;
        let vectors = random_patterns(500 + seed, 50, d);
        let k = 2;
        let p = pca_project(&vectors, k).unwrap();
        let (_, vals) = reference(&vectors, d);
        let mut residual = 0.0;
        for (v, coords) in vectors.iter().zip(&p.coordinates) {
            for j in 0..d {
                let centered = v.bits[j] as f64 - p.mean[j];
                let recon: f64 = (0..k).map(|c| coords[c] * p.components[c][j]).sum();
                residual += (centered - recon).powi(2);
            }
        }
        let optimal: f64 = vals[k..].iter().map(|v| v.max(0.0)).sum::<f64>() * 49.0;
        assert!((residual - optimal).abs() < 1e-6, "seed {seed}: {residual} vs {optimal}");
    }
}
