//! Exact candidate generation from run-length encoded selections.
//!
//! For every selected state we encode its on-runs. `cover(t)` counts how
//! many of those runs contain `t`. A range can only share `min_overlap`
//! states with the selection if every step in it has `cover >= min_overlap`,
//! so candidates live inside maximal stretches of high cover. Within a
//! stretch the qualifying ends for a fixed start `a` form a prefix: the
//! range `[a, b]` keeps a state iff that state's run through `a` reaches
//! `b`, so `b` may extend up to the `min_overlap`-th largest such run end.

use super::error::EngineError;
use super::runs::{cover_counts, state_runs};
use super::select::TimeRange;
use super::state_set::StateSet;
use crate::dataset::StateMatrix;

/// Candidate starts with the largest admissible end for each.
#[derive(Debug, Clone, Default)]
pub(crate) struct CandidateBlocks {
    /// `(start, max_end)`: every `[start, b]` with `start <= b <= max_end`
    /// qualifies.
    pub blocks: Vec<(usize, usize)>,
}

impl CandidateBlocks {
    pub fn count(&self) -> usize {
        self.blocks.iter().map(|&(a, hi)| hi - a + 1).sum()
    }

    pub fn ranges(&self) -> impl Iterator<Item = TimeRange> + '_ {
        self.blocks
            .iter()
            .flat_map(|&(a, hi)| (a..=hi).map(move |b| TimeRange::new(a, b)))
    }
}

pub(crate) fn candidate_blocks(
    states: &StateMatrix,
    s1: &StateSet,
    threshold: f32,
    min_overlap: usize,
    max_len: usize,
) -> Result<CandidateBlocks, EngineError> {
    if s1.is_empty() {
        return Err(EngineError::EmptySelection);
    }
    if let Some(c) = s1.max().filter(|&c| c >= states.num_states()) {
        return Err(EngineError::StateOutOfBounds {
            index: c,
            dims: states.num_states(),
        });
    }
    if min_overlap == 0 || max_len == 0 {
        return Err(EngineError::InvalidParams(
            "min_overlap and max_len must be at least 1".into(),
        ));
    }
    let mut out = CandidateBlocks::default();
    if min_overlap > s1.len() {
        return Ok(out);
    }

    let t_len = states.num_timesteps();
    let runs: Vec<Vec<TimeRange>> = s1.iter().map(|c| state_runs(states, c, threshold)).collect();
    let cover = cover_counts(t_len, runs.iter().map(Vec::as_slice));

    let mut cursor = vec![0usize; runs.len()];
    let mut ends = Vec::with_capacity(runs.len());
    let mut t = 0;
    while t < t_len {
        if (cover[t] as usize) < min_overlap {
            t += 1;
            continue;
        }
        let stretch_start = t;
        while t < t_len && cover[t] as usize >= min_overlap {
            t += 1;
        }
        for a in stretch_start..t {
            ends.clear();
            for (state_runs, pos) in runs.iter().zip(cursor.iter_mut()) {
                while *pos < state_runs.len() && state_runs[*pos].end < a {
                    *pos += 1;
                }
                if let Some(r) = state_runs.get(*pos).filter(|r| r.start <= a) {
                    ends.push(r.end);
                }
            }
            debug_assert!(ends.len() >= min_overlap);
            let (_, kth, _) = ends.select_nth_unstable_by(min_overlap - 1, |x, y| y.cmp(x));
            let hi = (*kth).min(a + max_len - 1);
            out.blocks.push((a, hi));
        }
    }
    Ok(out)
}

/// Every range `[a, b]` with `b - a + 1 <= max_len` over which at least
/// `min_overlap` states of `s1` are on throughout, sorted by `(start, end)`.
pub fn candidate_ranges(
    states: &StateMatrix,
    s1: &StateSet,
    threshold: f32,
    min_overlap: usize,
    max_len: usize,
) -> Result<Vec<TimeRange>, EngineError> {
    Ok(candidate_blocks(states, s1, threshold, min_overlap, max_len)?
        .ranges()
        .collect())
}

/// Number of candidates `candidate_ranges` would return, without
/// materializing them.
pub fn candidate_count(
    states: &StateMatrix,
    s1: &StateSet,
    threshold: f32,
    min_overlap: usize,
    max_len: usize,
) -> Result<usize, EngineError> {
    Ok(candidate_blocks(states, s1, threshold, min_overlap, max_len)?.count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_runs() -> StateMatrix {
        // state0 on over [0,2], state1 on over [1,3]
        StateMatrix::from_columns(
            "h",
            &[vec![0.9, 0.9, 0.9, 0.1, 0.1], vec![0.1, 0.9, 0.9, 0.9, 0.1]],
        )
        .unwrap()
    }

    fn all_subranges(lo: usize, hi: usize, max_len: usize) -> Vec<TimeRange> {
        let mut v = Vec::new();
        for a in lo..=hi {
            for b in a..=hi.min(a + max_len - 1) {
                v.push(TimeRange::new(a, b));
            }
        }
        v
    }

    #[test]
    fn full_overlap_is_the_intersection_stretch() {
        let got = candidate_ranges(&two_runs(), &vec![0, 1].into(), 0.5, 2, 4).unwrap();
        assert_eq!(
            got,
            vec![TimeRange::new(1, 1), TimeRange::new(1, 2), TimeRange::new(2, 2)]
        );
    }

    #[test]
    fn single_overlap_covers_the_union_except_the_full_stretch() {
        // [0,3] lies in the cover stretch but no single state spans it
        let got = candidate_ranges(&two_runs(), &vec![0, 1].into(), 0.5, 1, 4).unwrap();
        let mut expected = all_subranges(0, 3, 4);
        expected.retain(|r| *r != TimeRange::new(0, 3));
        assert_eq!(got, expected);
        let n = candidate_count(&two_runs(), &vec![0, 1].into(), 0.5, 1, 4).unwrap();
        assert_eq!(n, 9);
    }

    #[test]
    fn max_len_bounds_candidates() {
        let got = candidate_ranges(&two_runs(), &vec![0, 1].into(), 0.5, 1, 2).unwrap();
        assert_eq!(got, all_subranges(0, 3, 2));
        let got = candidate_ranges(&two_runs(), &vec![0, 1].into(), 0.5, 2, 1).unwrap();
        assert_eq!(got, vec![TimeRange::new(1, 1), TimeRange::new(2, 2)]);
    }

    #[test]
    fn empty_selection() {
        assert_eq!(
            candidate_ranges(&two_runs(), &StateSet::new(), 0.5, 1, 4),
            Err(EngineError::EmptySelection)
        );
    }

    #[test]
    fn overlap_above_selection_size_yields_nothing() {
        assert!(candidate_ranges(&two_runs(), &vec![0].into(), 0.5, 2, 4)
            .unwrap()
            .is_empty());
    }
}
