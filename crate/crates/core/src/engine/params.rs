use serde::{Deserialize, Serialize};

use super::error::EngineError;
use super::select::SelectionSpec;

/// Results returned per query unless overridden.
pub const DEFAULT_TOP_K: usize = 50;

/// Minimum number of selected states a candidate must share.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MinOverlap {
    Count(usize),
    /// Fraction of `|S1|`, rounded up.
    Fraction(f64),
}

impl MinOverlap {
    pub fn resolve(self, selected: usize) -> Result<usize, EngineError> {
        match self {
            MinOverlap::Count(0) => Err(EngineError::InvalidParams("min_overlap must be at least 1".into())),
            MinOverlap::Count(n) => Ok(n),
            MinOverlap::Fraction(f) if !(f > 0.0 && f <= 1.0) => Err(EngineError::InvalidParams(format!(
                "min_overlap fraction must lie in (0, 1], got {f}"
            ))),
            MinOverlap::Fraction(f) => Ok(((f * selected as f64).ceil() as usize).max(1)),
        }
    }
}

/// Match query parameters; `None` fields take defaults derived from the
/// selection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchParams {
    #[serde(default)]
    pub min_overlap: Option<MinOverlap>,
    #[serde(default = "default_top_k")]
    pub top_k: usize,
    #[serde(default)]
    pub max_len: Option<usize>,
    #[serde(default)]
    pub include_query: bool,
}

fn default_top_k() -> usize {
    DEFAULT_TOP_K
}

impl Default for MatchParams {
    fn default() -> Self {
        Self {
            min_overlap: None,
            top_k: DEFAULT_TOP_K,
            max_len: None,
            include_query: false,
        }
    }
}

/// Parameters after defaults are applied; echoed back to clients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectiveParams {
    pub min_overlap: usize,
    pub top_k: usize,
    pub max_len: usize,
    pub include_query: bool,
}

impl MatchParams {
    pub fn resolve(&self, spec: &SelectionSpec, selected: usize) -> Result<EffectiveParams, EngineError> {
        if self.top_k == 0 {
            return Err(EngineError::InvalidParams("top_k must be at least 1".into()));
        }
        if self.max_len == Some(0) {
            return Err(EngineError::InvalidParams("max_len must be at least 1".into()));
        }
        let min_overlap = self
            .min_overlap
            .unwrap_or(MinOverlap::Fraction(0.5))
            .resolve(selected)?;
        let query_len = spec.end.saturating_sub(spec.start) + 1;
        Ok(EffectiveParams {
            min_overlap,
            top_k: self.top_k,
            max_len: self.max_len.unwrap_or(2 * query_len + 10),
            include_query: self.include_query,
        })
    }
}
