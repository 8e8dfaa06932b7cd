use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("i/o failure on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("missing file: {0}")]
    MissingFile(PathBuf),

    #[error("bad magic bytes in {path}: expected \"LSTV\", found {found:?}")]
    BadMagic { path: PathBuf, found: [u8; 4] },

    #[error("unsupported container version {version} in {path}")]
    UnsupportedVersion { path: PathBuf, version: u32 },

    #[error("unsupported dtype code {code} in {path} (expected {expected})")]
    UnsupportedDtype { path: PathBuf, code: u8, expected: u8 },

    #[error("truncated file {path}: expected {expected} bytes, found {actual}")]
    TruncatedFile {
        path: PathBuf,
        expected: u64,
        actual: u64,
    },

    #[error("trailing data in {path}: expected {expected} bytes, found {actual}")]
    TrailingData {
        path: PathBuf,
        expected: u64,
        actual: u64,
    },

    #[error("invalid shape {rows}x{cols}: both dimensions must be at least 1")]
    InvalidShape { rows: u64, cols: u64 },

    #[error("non-finite value {value} at row {row}, column {col}")]
    NonFiniteValue { row: usize, col: usize, value: f32 },

    #[error("length mismatch: {what} has {actual} timesteps, expected {expected}")]
    LengthMismatch {
        what: String,
        expected: usize,
        actual: usize,
    },

    #[error("duplicate source id {0:?}")]
    DuplicateSourceId(String),

    #[error("duplicate annotation track {0:?}")]
    DuplicateTrack(String),

    #[error("parse error at row {row}, column {col}: {token:?} is not a number")]
    Parse {
        row: usize,
        col: usize,
        token: String,
    },

    #[error("expected {expected} values, found {actual}")]
    CountMismatch { expected: usize, actual: usize },

    #[error("token {token:?} at position {position} is not in the vocabulary")]
    UnknownToken { position: usize, token: String },

    #[error("vocabulary repeats token {token:?} on line {line}")]
    DuplicateVocabulary { line: usize, token: String },

    #[error("track {track:?}: id {id} at position {position} has no label")]
    MissingLabel {
        track: String,
        id: i32,
        position: usize,
    },

    #[error("malformed label line {line} in {path}: {reason}")]
    BadLabelLine {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("config {path}: {message}")]
    Config { path: PathBuf, message: String },
}

impl DatasetError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        let path = path.into();
        if source.kind() == std::io::ErrorKind::NotFound {
            DatasetError::MissingFile(path)
        } else {
            DatasetError::Io { path, source }
        }
    }

    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            DatasetError::Io { .. } => "IoFailure",
            DatasetError::MissingFile(_) => "MissingFile",
            DatasetError::BadMagic { .. } => "BadMagic",
            DatasetError::UnsupportedVersion { .. } => "UnsupportedVersion",
            DatasetError::UnsupportedDtype { .. } => "UnsupportedDtype",
            DatasetError::TruncatedFile { .. } => "TruncatedFile",
            DatasetError::TrailingData { .. } => "TrailingData",
            DatasetError::InvalidShape { .. } => "InvalidShape",
            DatasetError::NonFiniteValue { .. } => "NonFiniteValue",
            DatasetError::LengthMismatch { .. } => "LengthMismatch",
            DatasetError::DuplicateSourceId(_) => "DuplicateSourceId",
            DatasetError::DuplicateTrack(_) => "DuplicateTrack",
            DatasetError::Parse { .. } => "ParseError",
            DatasetError::CountMismatch { .. } => "CountMismatch",
            DatasetError::UnknownToken { .. } => "UnknownToken",
            DatasetError::DuplicateVocabulary { .. } => "DuplicateVocabulary",
            DatasetError::MissingLabel { .. } => "MissingLabel",
            DatasetError::BadLabelLine { .. } => "BadLabelLine",
            DatasetError::Config { .. } => "ConfigError",
        }
    }
}

pub type Result<T, E = DatasetError> = std::result::Result<T, E>;
