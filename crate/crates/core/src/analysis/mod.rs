//! PCA over binary selection patterns.

mod jacobi;
mod patterns;
mod pca;

use thiserror::Error;

use crate::engine::EngineError;

pub use jacobi::{jacobi_eigen, SymmetricEigen, MAX_SWEEPS, TOLERANCE};
pub use patterns::{collect_patterns, LabeledRange, PatternVector};
pub use pca::{apply_sign_convention, pca_project, PcaProjection, SIGN_TIE_TOLERANCE};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("PCA needs at least 2 vectors, got {0}")]
    TooFewVectors(usize),
    #[error("pattern has {actual} states, expected {expected}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("cannot extract {k} components from {dims} dimensions")]
    InvalidComponents { k: usize, dims: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
}
