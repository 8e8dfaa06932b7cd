use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("range [{start}, {end}] is out of bounds for {len} timesteps")]
    RangeOutOfBounds { start: usize, end: usize, len: usize },

    #[error("state index {index} is out of bounds for {dims} states")]
    StateOutOfBounds { index: usize, dims: usize },

    #[error("threshold must be finite, got {0}")]
    NonFiniteThreshold(f32),

    #[error("selection is empty: no hidden state is on throughout the selected range")]
    EmptySelection,

    #[error("invalid match parameters: {0}")]
    InvalidParams(String),
}

impl EngineError {
    pub fn kind(&self) -> &'static str {
        match self {
            EngineError::RangeOutOfBounds { .. } => "RangeOutOfBounds",
            EngineError::StateOutOfBounds { .. } => "StateOutOfBounds",
            EngineError::NonFiniteThreshold(_) => "NonFiniteThreshold",
            EngineError::EmptySelection => "EmptySelection",
            EngineError::InvalidParams(_) => "InvalidParams",
        }
    }
}
