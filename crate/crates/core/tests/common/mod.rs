//! Brute-force reference implementations used by the integration tests.
//! They only read raw matrix values and share no code paths with the
//! library's selection or ranking.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statescope::StateMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_matrix(rng: &mut impl Rng, t: usize, d: usize) -> StateMatrix {
    let values = (0..t * d).map(|_| rng.gen_range(-1.0f32..=1.0)).collect();
    StateMatrix::new("h", t, d, values).unwrap()
}

/// Matrix whose values cluster around a few levels so that runs are long
/// enough to make multi-step candidates common.
pub fn blocky_matrix(rng: &mut impl Rng, t: usize, d: usize) -> StateMatrix {
    let mut cols = Vec::with_capacity(d);
    for _ in 0..d {
        let mut col = Vec::with_capacity(t);
        let mut v: f32 = rng.gen_range(-1.0..=1.0);
        for _ in 0..t {
            if rng.gen_bool(0.3) {
                v = rng.gen_range(-1.0..=1.0);
            }
            col.push(v);
        }
        cols.push(col);
    }
    StateMatrix::from_columns("h", &cols).unwrap()
}

fn on(m: &StateMatrix, t: usize, c: usize, l: f32) -> bool {
    m.values()[t * m.num_states() + c] >= l
}

/// States on over all of `[a, b]`, honoring boundary limits.
pub fn on_set(m: &StateMatrix, a: usize, b: usize, l: f32, left: bool, right: bool) -> Vec<usize> {
    let t_len = m.num_timesteps();
    (0..m.num_states())
        .filter(|&c| (a..=b).all(|t| on(m, t, c, l)))
        .filter(|&c| !left || a == 0 || !on(m, a - 1, c, l))
        .filter(|&c| !right || b == t_len - 1 || !on(m, b + 1, c, l))
        .collect()
}

pub fn intersect(x: &[usize], y: &[usize]) -> usize {
    x.iter().filter(|c| y.contains(c)).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMatch {
    pub start: usize,
    pub end: usize,
    pub overlap: usize,
    pub union: usize,
    pub s2: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct OracleQuery {
    pub start: usize,
    pub end: usize,
    pub threshold: f32,
    pub left: bool,
    pub right: bool,
    pub min_overlap: usize,
    pub max_len: usize,
    pub top_k: usize,
    pub include_query: bool,
}

/// Every qualifying range without limits, sorted by `(start, end)`.
pub fn oracle_candidates(m: &StateMatrix, s1: &[usize], l: f32, min_overlap: usize, max_len: usize) -> Vec<(usize, usize)> {
    let t_len = m.num_timesteps();
    let mut out = Vec::new();
    for a in 0..t_len {
        for b in a..t_len.min(a + max_len) {
            let s2 = on_set(m, a, b, l, false, false);
            if intersect(s1, &s2) >= min_overlap {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn oracle_rank(m: &StateMatrix, s1: &[usize], q: &OracleQuery) -> Vec<OracleMatch> {
    let t_len = m.num_timesteps();
    let mut all = Vec::new();
    for a in 0..t_len {
        for b in a..t_len.min(a + q.max_len) {
            if !q.include_query && a <= q.end && q.start <= b {
                continue;
            }
            let s2 = on_set(m, a, b, q.threshold, q.left, q.right);
            let overlap = intersect(s1, &s2);
            if overlap < q.min_overlap {
                continue;
            }
            let union = s1.len() + s2.len() - overlap;
            all.push(OracleMatch { start: a, end: b, overlap, union, s2 });
        }
    }
    all.sort_by(|x, y| {
        y.overlap
            .cmp(&x.overlap)
            .then(x.union.cmp(&y.union))
            .then((y.end - y.start).cmp(&(x.end - x.start)))
            .then(x.start.cmp(&y.start))
    });
    let mut kept: Vec<OracleMatch> = Vec::new();
    for cand in all {
        if kept.len() == q.top_k {
            break;
        }
        if kept.iter().all(|k| cand.end < k.start || k.end < cand.start) {
            kept.push(cand);
        }
    }
    kept
}

pub fn default_min_overlap(s1_len: usize) -> usize {
    s1_len.div_ceil(2).max(1)
}
