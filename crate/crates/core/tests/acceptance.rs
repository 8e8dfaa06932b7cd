//! Acceptance suite. Runs every criterion in sequence, prints one
//! `PASS`/`FAIL` line each and exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use statescope::analysis::{collect_patterns, pca_project, LabeledRange, PatternVector};
use statescope::dataset::{load_state_matrix, save_state_matrix};
use statescope::engine::{
    candidate_count, rank_matches, run_match, select_states, MatchParams, MinOverlap, SelectionSpec,
    DEFAULT_TOP_K,
};
use statescope::synth::{gen_paren, level_spans, oracle_states, MAX_LEVEL};
use statescope::StateMatrix;

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    check(elapsed < limit, || format!("{what} took {elapsed:.2?}, limit {limit:?}"))
}

/// 200 random instances: engine ranking equals the brute-force oracle.
fn oracle_equivalence() -> Outcome {
    let started = Instant::now();
    let mut r = rng(20_240_601);
    let mut instances = 0;
    let mut total_results = 0;
    while instances < 200 {
        let t = r.gen_range(1..=200);
        let d = r.gen_range(1..=8);
        let m = uniform_matrix(&mut r, t, d);
        // retry specs until the selection is non-empty
        let (spec, s1) = loop {
            let start = r.gen_range(0..t);
            let end = (start + r.gen_range(0..4)).min(t - 1);
            let l = r.gen_range(-0.8f32..0.6);
            let spec = SelectionSpec::new("h", start, end, l).with_limits(r.gen_bool(0.3), r.gen_bool(0.3));
            let s1 = select_states(&m, &spec).map_err(|e| e.to_string())?;
            if !s1.is_empty() {
                break (spec, s1);
            }
        };
        let min_overlap = r.gen_bool(0.5).then(|| r.gen_range(1..=s1.len()));
        let max_len = r.gen_bool(0.5).then(|| r.gen_range(1..=20));
        let top_k = if r.gen_bool(0.5) { DEFAULT_TOP_K } else { r.gen_range(1..=80) };
        let include_query = r.gen_bool(0.5);
        let params = MatchParams {
            min_overlap: min_overlap.map(MinOverlap::Count),
            top_k,
            max_len,
            include_query,
        };
        let q = OracleQuery {
            start: spec.start,
            end: spec.end,
            threshold: spec.threshold,
            left: spec.left_limit,
            right: spec.right_limit,
            min_overlap: min_overlap.unwrap_or_else(|| default_min_overlap(s1.len())),
            max_len: max_len.unwrap_or(2 * (spec.end - spec.start + 1) + 10),
            top_k,
            include_query,
        };
        let expected = oracle_rank(&m, s1.as_slice(), &q);
        let got = rank_matches(&m, &s1, &spec, &params).map_err(|e| e.to_string())?;
        let got_keys: Vec<_> = got
            .iter()
            .map(|g| (g.range.start, g.range.end, g.overlap, g.union, g.s2.as_slice().to_vec()))
            .collect();
        let want_keys: Vec<_> = expected
            .iter()
            .map(|e| (e.start, e.end, e.overlap, e.union, e.s2.clone()))
            .collect();
        check(got_keys == want_keys, || {
            format!("instance {instances} (T={t}, D={d}, spec={spec:?}, params={params:?}) differs from oracle")
        })?;
        total_results += got.len();
        instances += 1;
    }
    within(started.elapsed(), Duration::from_secs(60), "oracle equivalence")?;
    Ok(format!(
        "{instances} instances, {total_results} ranked results identical, {:.2?}",
        started.elapsed()
    ))
}

/// Seed-42 parenthesis corpus: every match for every maximal level-4 span
/// stays at level >= 4.
fn parenthesis_reproduction() -> Outcome {
    let started = Instant::now();
    let corpus = gen_paren(42, 10_000).map_err(|e| e.to_string())?;
    let levels = corpus.level_values();
    let states = oracle_states(&levels, 20, 42).map_err(|e| e.to_string())?;
    let spans = level_spans(&levels, MAX_LEVEL);
    check(!spans.is_empty(), || "corpus has no level-4 span".into())?;
    let mut matches = 0;
    let mut slowest = Duration::ZERO;
    for &(a, b) in &spans {
        let spec = SelectionSpec::new("states", a, b, 0.5);
        let query = Instant::now();
        let out = run_match(&states, &spec, &MatchParams::default()).map_err(|e| e.to_string())?;
        slowest = slowest.max(query.elapsed());
        check(out.s1.as_slice().starts_with(&[0, 1, 2, 3]), || {
            format!("span [{a},{b}] selected {}", out.s1)
        })?;
        for r in &out.results {
            check((r.range.start..=r.range.end).all(|t| levels[t] >= 4), || {
                format!("span [{a},{b}]: match {:?} drops below level 4", r.range)
            })?;
        }
        matches += out.results.len();
    }
    within(slowest, Duration::from_secs(5), "slowest level-4 query")?;
    Ok(format!(
        "{} level-4 spans queried, {matches} matches all at level >= 4, slowest query {slowest:.2?}, total {:.2?}",
        spans.len(),
        started.elapsed()
    ))
}

/// The default query returns at most 50 results even when far more
/// disjoint candidates exist.
fn top_k_default() -> Outcome {
    let corpus = gen_paren(42, 10_000).map_err(|e| e.to_string())?;
    let levels = corpus.level_values();
    let states = oracle_states(&levels, 20, 42).map_err(|e| e.to_string())?;
    let (a, b) = level_spans(&levels, 1)[0];
    let spec = SelectionSpec::new("states", a, b, 0.5);
    let out = run_match(&states, &spec, &MatchParams::default()).map_err(|e| e.to_string())?;
    check(out.params.top_k == 50, || format!("default top_k is {}", out.params.top_k))?;
    check(out.results.len() <= 50, || format!("{} results", out.results.len()))?;
    let unbounded = MatchParams { top_k: usize::MAX, ..Default::default() };
    let all = run_match(&states, &spec, &unbounded).map_err(|e| e.to_string())?;
    check(all.results.len() > 50, || "fixture does not exceed 50 disjoint matches".into())?;
    check(all.results[..50] == out.results[..], || "default results are not the top 50".into())?;
    Ok(format!(
        "{} results returned of {} disjoint matches available",
        out.results.len(),
        all.results.len()
    ))
}

/// 1,000 random cases: raising the threshold or adding limits never grows S1.
fn selection_monotonicity() -> Outcome {
    let mut r = rng(77);
    let mut nonempty = 0;
    for case in 0..1000 {
        let t = r.gen_range(1..=60);
        let d = r.gen_range(1..=16);
        let m = if r.gen_bool(0.5) { uniform_matrix(&mut r, t, d) } else { blocky_matrix(&mut r, t, d) };
        let start = r.gen_range(0..t);
        let end = (start + r.gen_range(0..5)).min(t - 1);
        let l = r.gen_range(-1.0f32..1.0);
        let base = SelectionSpec::new("h", start, end, l);
        let s = select_states(&m, &base).map_err(|e| e.to_string())?;
        nonempty += usize::from(!s.is_empty());
        let higher = SelectionSpec { threshold: l + r.gen_range(0.0f32..1.0), ..base.clone() };
        let variants = [
            ("threshold", higher),
            ("left limit", base.clone().with_limits(true, false)),
            ("right limit", base.clone().with_limits(false, true)),
            ("both limits", base.clone().with_limits(true, true)),
        ];
        for (what, spec) in variants {
            let shrunk = select_states(&m, &spec).map_err(|e| e.to_string())?;
            check(shrunk.is_subset(&s), || format!("case {case}: {what} grew {s} to {shrunk}"))?;
        }
    }
    Ok(format!("1000 cases ({nonempty} with non-empty S1), no selection grew"))
}

/// 100 random matrices survive save/load bit for bit.
fn format_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut r = rng(4242);
    for i in 0..100 {
        let t = r.gen_range(1..=64);
        let d = r.gen_range(1..=32);
        let values: Vec<f32> = (0..t * d)
            .map(|_| loop {
                // arbitrary finite bit patterns, subnormals and signed zeros included
                let v = f32::from_bits(r.gen());
                if v.is_finite() {
                    break v;
                }
            })
            .collect();
        let m = StateMatrix::new(format!("m{i}"), t, d, values).map_err(|e| e.to_string())?;
        let path = dir.path().join(format!("m{i}.bin"));
        save_state_matrix(&m, &path).map_err(|e| e.to_string())?;
        let back = load_state_matrix(&path).map_err(|e| e.to_string())?;
        let same = back.num_timesteps() == t
            && back.num_states() == d
            && back.values().iter().zip(m.values()).all(|(a, b)| a.to_bits() == b.to_bits());
        check(same, || format!("matrix {i} ({t}x{d}) changed on round trip"))?;
    }
    Ok("100 matrices bitwise identical".into())
}

/// An eigen-cluster: indices of eigenvalues equal within `tol`.
fn clusters(values: &[f64], tol: f64) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, v) in values.iter().enumerate() {
        match out.last_mut() {
            Some(c) if (values[*c.last().unwrap()] - v).abs() <= tol => c.push(i),
            _ => out.push(vec![i]),
        }
    }
    out
}

fn reference_pca(vectors: &[PatternVector]) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = vectors.len();
    let d = vectors[0].bits.len();
    let x = DMatrix::from_fn(n, d, |i, j| vectors[i].bits[j] as f64);
    let mean = x.row_mean();
    let centered = DMatrix::from_fn(n, d, |i, j| x[(i, j)] - mean[j]);
    let cov = centered.transpose() * &centered / (n as f64 - 1.0);
    let eig = SymmetricEigen::new(cov);
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let mut coords = vec![vec![0.0; d]; n];
    for (col, &idx) in order.iter().enumerate() {
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

/// 50 random binary datasets against nalgebra's eigensolver, plus two-class
/// separation on component 1.
fn pca_correctness() -> Outcome {
    const TOL: f64 = 1e-6;
    let mut r = rng(8);
    let mut per_coordinate = 0;
    let mut subspace = 0;
    for ds in 0..50 {
        let d = r.gen_range(2..=10);
        let n = r.gen_range(2..=100);
        let p: Vec<f64> = (0..d).map(|_| r.gen_range(0.05..0.95)).collect();
        let vectors: Vec<PatternVector> = (0..n)
            .map(|_| PatternVector {
                bits: p.iter().map(|&pi| r.gen_bool(pi) as u8).collect(),
                label: None,
            })
            .collect();
        let (ref_coords, ref_vals) = reference_pca(&vectors);
        let full = pca_project(&vectors, d).map_err(|e| e.to_string())?;
        let two = pca_project(&vectors, 2).map_err(|e| e.to_string())?;
        for (row2, rowd) in two.coordinates.iter().zip(&full.coordinates) {
            check(row2[..] == rowd[..2], || format!("dataset {ds}: k=2 disagrees with k=D"))?;
        }
        for cluster in clusters(&ref_vals, 1e-8) {
            if cluster.len() == 1 {
                // isolated eigenvalue: coordinates are unique up to the sign convention
                let c = cluster[0];
                per_coordinate += 1;
                for (i, (g, w)) in full.coordinates.iter().zip(&ref_coords).enumerate() {
                    check((g[c] - w[c]).abs() < TOL, || {
                        format!("dataset {ds} row {i} comp {c}: {} vs {}", g[c], w[c])
                    })?;
                }
            } else {
                // repeated eigenvalue: compare the rotation-invariant Gram matrix
                subspace += 1;
                for i in 0..n {
                    for j in 0..n {
                        let g: f64 = cluster.iter().map(|&c| full.coordinates[i][c] * full.coordinates[j][c]).sum();
                        let w: f64 = cluster.iter().map(|&c| ref_coords[i][c] * ref_coords[j][c]).sum();
                        check((g - w).abs() < TOL, || format!("dataset {ds}: eigenspace projection differs"))?;
                    }
                }
            }
        }
    }

    // two classes with disjoint on-patterns plus noise states
    let mut states = Vec::new();
    let mut ranges = Vec::new();
    let d = 8;
    for i in 0..40 {
        let class = i % 2;
        let mut row = vec![0.0f32; d];
        for (c, v) in row.iter_mut().enumerate() {
            let signal = if class == 0 { c < 3 } else { (3..6).contains(&c) };
            *v = if signal || (c >= 6 && r.gen_bool(0.5)) { 1.0 } else { -1.0 };
        }
        states.push(row);
        ranges.push(LabeledRange::new(i, i, if class == 0 { "NP" } else { "VP" }));
    }
    let m = StateMatrix::from_rows("h", &states).map_err(|e| e.to_string())?;
    let patterns = collect_patterns(&m, &ranges, 0.5).map_err(|e| e.to_string())?;
    let proj = pca_project(&patterns, 2).map_err(|e| e.to_string())?;
    let side = |label: &str| -> Vec<f64> {
        proj.labels
            .iter()
            .zip(&proj.coordinates)
            .filter(|(l, _)| l.as_deref() == Some(label))
            .map(|(_, c)| c[0].signum())
            .collect()
    };
    let (np, vp) = (side("NP"), side("VP"));
    let separated = np.iter().all(|&s| s == np[0]) && vp.iter().all(|&s| s == vp[0]) && np[0] != vp[0];
    check(separated, || "classes share a half-plane of component 1".into())?;
    Ok(format!(
        "50 datasets: {per_coordinate} isolated components within {TOL:e}, {subspace} repeated eigenspaces matched; two classes split on component 1"
    ))
}

/// One match over a 1,000,000 x 300 matrix in under 2 s, with the candidate
/// set far below the number of ranges.
fn throughput() -> Outcome {
    const T: usize = 1_000_000;
    const D: usize = 300;
    const MOTIF_STATES: usize = 8;
    const MOTIF_LEN: usize = 6;
    let mut r = rng(1_000_000);
    let mut values: Vec<f32> = (0..T * D).map(|_| r.gen_range(-1.0f32..1.0)).collect();
    // plant a motif on states 0..8 at 1000 disjoint positions
    let mut starts: Vec<usize> = (0..1000).map(|i| i * 1000 + r.gen_range(0..1000 - MOTIF_LEN)).collect();
    starts.sort_unstable();
    for &s in &starts {
        for t in s..s + MOTIF_LEN {
            for c in 0..MOTIF_STATES {
                values[t * D + c] = 0.9;
            }
        }
    }
    let m = StateMatrix::new("h", T, D, values).map_err(|e| e.to_string())?;
    let query = starts[500];
    let spec = SelectionSpec::new("h", query, query + MOTIF_LEN - 1, 0.5);

    let started = Instant::now();
    let out = run_match(&m, &spec, &MatchParams::default()).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();

    let s1 = &out.s1;
    let candidates = candidate_count(&m, s1, 0.5, out.params.min_overlap, out.params.max_len)
        .map_err(|e| e.to_string())?;
    check(candidates == out.candidates, || "candidate count mismatch".into())?;
    let all_ranges = (T as f64) * (T as f64 + 1.0) / 2.0;
    check((candidates as f64) < all_ranges * 1e-4, || {
        format!("{candidates} candidates is not << {all_ranges:e} ranges")
    })?;
    check(out.results.len() == 50, || format!("{} results", out.results.len()))?;
    check(out.results[0].overlap >= MOTIF_STATES, || "top match misses the motif".into())?;
    within(elapsed, Duration::from_secs(2), "match query")?;
    Ok(format!(
        "|S1|={}, {candidates} candidates vs {all_ranges:.1e} ranges, query {elapsed:.2?}",
        s1.len()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("oracle equivalence", oracle_equivalence),
        ("parenthesis reproduction", parenthesis_reproduction),
        ("top-k default", top_k_default),
        ("selection monotonicity", selection_monotonicity),
        ("format round-trip", format_round_trip),
        ("pca correctness", pca_correctness),
        ("throughput", throughput),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
