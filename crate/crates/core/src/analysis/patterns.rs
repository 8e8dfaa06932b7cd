use crate::dataset::StateMatrix;
use crate::engine::{select_states, SelectionSpec, TimeRange};

use super::AnalysisError;

/// Binary on/off pattern of a selection, indexed by state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternVector {
    pub bits: Vec<u8>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledRange {
    pub range: TimeRange,
    pub label: Option<String>,
}

impl LabeledRange {
    pub fn new(start: usize, end: usize, label: impl Into<String>) -> Self {
        Self {
            range: TimeRange::new(start, end),
            label: Some(label.into()),
        }
    }
}

/// One pattern per range: the unlimited selection at `threshold`.
pub fn collect_patterns(
    states: &StateMatrix,
    ranges: &[LabeledRange],
    threshold: f32,
) -> Result<Vec<PatternVector>, AnalysisError> {
    ranges
        .iter()
        .map(|r| {
            let spec = SelectionSpec::new(states.source_id(), r.range.start, r.range.end, threshold);
            let s1 = select_states(states, &spec)?;
            Ok(PatternVector {
                bits: s1.to_bits(states.num_states()),
                label: r.label.clone(),
            })
        })
        .collect()
}
