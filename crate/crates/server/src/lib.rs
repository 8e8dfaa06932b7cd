//! HTTP query service and command-line front end for statescope datasets.
//!
//! [`api::router`] builds the service over a [`Catalog`] of datasets
//! discovered under a data root. Every endpoint is a pure function of the
//! request and the immutable catalog, so identical requests produce
//! identical bodies.

pub mod api;
pub mod catalog;
pub mod cli;
mod error;

pub use catalog::{Catalog, CatalogError};
pub use error::ApiError;
