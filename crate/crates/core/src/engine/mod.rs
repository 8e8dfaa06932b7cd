//! Selection, candidate generation and match ranking.

mod candidates;
mod error;
mod params;
mod rank;
mod runs;
mod search;
mod select;
mod state_set;

pub use candidates::{candidate_count, candidate_ranges};
pub use error::EngineError;
pub use params::{EffectiveParams, MatchParams, MinOverlap, DEFAULT_TOP_K};
pub use rank::{match_heatmap, rank_matches, run_match, MatchOutcome, MatchResult};
pub use runs::state_runs;
pub use search::search_phrase;
pub use select::{on_count, select_states, SelectionSpec, TimeRange};
pub use state_set::StateSet;
