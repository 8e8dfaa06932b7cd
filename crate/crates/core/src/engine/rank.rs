//! Ranking of candidate ranges against a selection.
//!
//! Each candidate `[a, b]` gets `S2`, the states on throughout it (filtered
//! by the selection's limits at the candidate's own boundaries). Candidates
//! sort by overlap `|S1 ∩ S2|` descending, then union `|S1 ∪ S2|`
//! ascending, then length descending, then start ascending. The sorted list
//! is walked greedily, keeping only ranges disjoint from those kept so far.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::candidates::{candidate_blocks, CandidateBlocks};
use super::error::EngineError;
use super::params::{EffectiveParams, MatchParams};
use super::select::{select_states, states_on_throughout, SelectionSpec, TimeRange};
use super::state_set::StateSet;
use crate::dataset::StateMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchResult {
    pub range: TimeRange,
    pub s2: StateSet,
    pub overlap: usize,
    pub union: usize,
    /// `s1` states on at each position of the range.
    pub per_position_overlap: Vec<usize>,
}

impl MatchResult {
    pub fn length(&self) -> usize {
        self.range.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Scored {
    start: usize,
    end: usize,
    overlap: usize,
    union: usize,
}

impl Scored {
    fn key(&self) -> (Reverse<usize>, usize, Reverse<usize>, usize) {
        (
            Reverse(self.overlap),
            self.union,
            Reverse(self.end - self.start),
            self.start,
        )
    }
}

/// Full output of one match query.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchOutcome {
    pub s1: StateSet,
    pub params: EffectiveParams,
    /// Candidates produced by run-length filtering, before scoring.
    pub candidates: usize,
    pub results: Vec<MatchResult>,
}

/// Selects `S1` from `spec` and ranks matches for it.
pub fn run_match(
    states: &StateMatrix,
    spec: &SelectionSpec,
    params: &MatchParams,
) -> Result<MatchOutcome, EngineError> {
    let s1 = select_states(states, spec)?;
    let effective = params.resolve(spec, s1.len())?;
    let blocks = candidate_blocks(states, &s1, spec.threshold, effective.min_overlap, effective.max_len)?;
    let candidates = blocks.count();
    let results = rank_blocks(states, &s1, spec, &effective, &blocks);
    Ok(MatchOutcome {
        s1,
        params: effective,
        candidates,
        results,
    })
}

/// Ranked, pairwise-disjoint matches for the selected set `s1`.
pub fn rank_matches(
    states: &StateMatrix,
    s1: &StateSet,
    spec: &SelectionSpec,
    params: &MatchParams,
) -> Result<Vec<MatchResult>, EngineError> {
    spec.validate(states)?;
    let effective = params.resolve(spec, s1.len())?;
    let blocks = candidate_blocks(states, s1, spec.threshold, effective.min_overlap, effective.max_len)?;
    Ok(rank_blocks(states, s1, spec, &effective, &blocks))
}

fn rank_blocks(
    states: &StateMatrix,
    s1: &StateSet,
    spec: &SelectionSpec,
    params: &EffectiveParams,
    blocks: &CandidateBlocks,
) -> Vec<MatchResult> {
    let threshold = spec.threshold;
    let t_len = states.num_timesteps();
    let query = spec.range();
    let mut in_s1 = vec![false; states.num_states()];
    for c in s1.iter() {
        in_s1[c] = true;
    }

    let mut scored = Vec::with_capacity(blocks.count());
    let mut active = Vec::with_capacity(states.num_states());
    for &(a, hi) in &blocks.blocks {
        active.clear();
        active.extend((0..states.num_states()).filter(|&c| states.get(a, c) >= threshold));
        if spec.left_limit && a > 0 {
            let before = states.row(a - 1);
            active.retain(|&c| before[c] < threshold);
        }
        for b in a..=hi {
            if b > a {
                let row = states.row(b);
                active.retain(|&c| row[c] >= threshold);
            }
            if !params.include_query && query.overlaps(&TimeRange::new(a, b)) {
                continue;
            }
            let after = (spec.right_limit && b + 1 < t_len).then(|| states.row(b + 1));
            let (mut overlap, mut extra) = (0, 0);
            for &c in &active {
                if after.is_some_and(|row| row[c] >= threshold) {
                    continue;
                }
                if in_s1[c] {
                    overlap += 1;
                } else {
                    extra += 1;
                }
            }
            if overlap < params.min_overlap {
                continue;
            }
            scored.push(Scored {
                start: a,
                end: b,
                overlap,
                union: s1.len() + extra,
            });
        }
    }
    scored.sort_unstable_by_key(Scored::key);

    let mut accepted: BTreeMap<usize, usize> = BTreeMap::new();
    let mut picked = Vec::with_capacity(params.top_k.min(scored.len()));
    for cand in scored {
        if picked.len() == params.top_k {
            break;
        }
        let clash = accepted
            .range(..=cand.end)
            .next_back()
            .is_some_and(|(_, &end)| end >= cand.start);
        if clash {
            continue;
        }
        accepted.insert(cand.start, cand.end);
        picked.push(cand);
    }

    picked
        .into_iter()
        .map(|c| {
            let range = TimeRange::new(c.start, c.end);
            let s2 = StateSet::from_sorted(states_on_throughout(
                states,
                range,
                threshold,
                spec.left_limit,
                spec.right_limit,
            ));
            debug_assert_eq!(s2.intersection_len(s1), c.overlap);
            MatchResult {
                range,
                s2,
                overlap: c.overlap,
                union: c.union,
                per_position_overlap: match_heatmap(states, s1, range, threshold),
            }
        })
        .collect()
}

/// Per-position count of `s1` states on inside `range`.
pub fn match_heatmap(states: &StateMatrix, s1: &StateSet, range: TimeRange, threshold: f32) -> Vec<usize> {
    (range.start..=range.end)
        .map(|t| {
            let row = states.row(t);
            s1.iter().filter(|&c| row[c] >= threshold).count()
        })
        .collect()
}
