use serde::{Deserialize, Serialize};

use super::error::EngineError;
use super::state_set::StateSet;
use crate::dataset::StateMatrix;

/// Inclusive timestep range `[start, end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TimeRange {
    pub start: usize,
    pub end: usize,
}

impl TimeRange {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        Self { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn overlaps(&self, other: &TimeRange) -> bool {
        self.start <= other.end && other.start <= self.end
    }

    pub fn contains(&self, t: usize) -> bool {
        self.start <= t && t <= self.end
    }

    pub fn check(&self, len: usize) -> Result<(), EngineError> {
        if self.start > self.end || self.end >= len {
            return Err(EngineError::RangeOutOfBounds {
                start: self.start,
                end: self.end,
                len,
            });
        }
        Ok(())
    }
}

/// A user hypothesis: a range, a threshold and the pattern-plot limits.
///
/// `left_limit` requires selected states to be off one step before the
/// range, `right_limit` one step after it. Sequence boundaries satisfy
/// either limit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionSpec {
    pub source_id: String,
    pub start: usize,
    pub end: usize,
    pub threshold: f32,
    #[serde(default)]
    pub left_limit: bool,
    #[serde(default)]
    pub right_limit: bool,
}

impl SelectionSpec {
    pub fn new(source_id: impl Into<String>, start: usize, end: usize, threshold: f32) -> Self {
        Self {
            source_id: source_id.into(),
            start,
            end,
            threshold,
            left_limit: false,
            right_limit: false,
        }
    }

    pub fn with_limits(mut self, left: bool, right: bool) -> Self {
        self.left_limit = left;
        self.right_limit = right;
        self
    }

    pub fn range(&self) -> TimeRange {
        TimeRange {
            start: self.start,
            end: self.end,
        }
    }

    pub fn validate(&self, states: &StateMatrix) -> Result<(), EngineError> {
        if !self.threshold.is_finite() {
            return Err(EngineError::NonFiniteThreshold(self.threshold));
        }
        self.range().check(states.num_timesteps())
    }
}

/// States on (`>= threshold`) at every step of `range`, optionally also off
/// (`< threshold`) immediately outside it. Does not validate.
pub(crate) fn states_on_throughout(
    states: &StateMatrix,
    range: TimeRange,
    threshold: f32,
    left_limit: bool,
    right_limit: bool,
) -> Vec<usize> {
    let t_len = states.num_timesteps();
    let mut active: Vec<usize> = (0..states.num_states())
        .filter(|&c| states.get(range.start, c) >= threshold)
        .collect();
    for t in range.start + 1..=range.end {
        let row = states.row(t);
        active.retain(|&c| row[c] >= threshold);
        if active.is_empty() {
            return active;
        }
    }
    if left_limit && range.start > 0 {
        let row = states.row(range.start - 1);
        active.retain(|&c| row[c] < threshold);
    }
    if right_limit && range.end + 1 < t_len {
        let row = states.row(range.end + 1);
        active.retain(|&c| row[c] < threshold);
    }
    active
}

/// Induces the selected state set from a selection.
pub fn select_states(states: &StateMatrix, spec: &SelectionSpec) -> Result<StateSet, EngineError> {
    spec.validate(states)?;
    Ok(StateSet::from_sorted(states_on_throughout(
        states,
        spec.range(),
        spec.threshold,
        spec.left_limit,
        spec.right_limit,
    )))
}

/// Number of `s1` states on at each timestep.
pub fn on_count(states: &StateMatrix, s1: &StateSet, threshold: f32) -> Vec<usize> {
    let members: Vec<usize> = s1.iter().filter(|&c| c < states.num_states()).collect();
    states
        .rows()
        .map(|row| members.iter().filter(|&&c| row[c] >= threshold).count())
        .collect()
}
