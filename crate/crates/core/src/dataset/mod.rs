//! Dataset model, storage formats and loading.

mod config;
mod error;
pub mod format;
mod load;
mod matrix;
mod text;
mod tokens;
mod track;

pub use config::{AnnotationConfig, DatasetConfig, StateSourceConfig};
pub use error::{DatasetError, Result};
pub use format::{load_state_matrix, load_track_ids, save_state_matrix, save_track_ids};
pub use load::{
    discover_configs, load_dataset, save_dataset, validate_dataset, Dataset, Severity,
    ValidationEntry, ValidationReport,
};
pub use matrix::StateMatrix;
pub use text::{import_text_matrix, parse_text_matrix};
pub use tokens::{load_tokens, load_vocabulary, save_tokens, write_lines, TokenSequence, Vocabulary};
pub use track::{load_labels, parse_labels, save_labels, AnnotationTrack, TrackKind};
