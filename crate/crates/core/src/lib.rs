//! Pattern selection and matching over recurrent hidden-state time series.
//!
//! A selection picks a token range and a threshold; the states that stay on
//! (`h >= threshold`) across the range form the selected set. Matching then
//! ranks every other range of the dataset by how many of those states are on
//! over it. Candidate ranges come from run-length encoding the selected
//! states, so queries over millions of timesteps never enumerate all ranges.
//!
//! - [`dataset`]: state matrices, tokens, annotation tracks, the native
//!   binary container and YAML configs.
//! - [`engine`]: selection, candidate generation, ranking and phrase search.
//! - [`synth`]: the parenthesis counting language with oracle states.
//! - [`analysis`]: PCA of binary selection patterns.

pub mod analysis;
pub mod dataset;
pub mod engine;
pub mod synth;

pub use dataset::{Dataset, DatasetError, StateMatrix, TokenSequence};
pub use engine::{EngineError, MatchParams, MatchResult, SelectionSpec, StateSet, TimeRange};
