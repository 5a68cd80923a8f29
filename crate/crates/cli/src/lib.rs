//! Library side of the `coring-lab` CLI: the JSON instance format, the
//! command implementations, and deterministic report rendering.

pub mod commands;
pub mod instance;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error(transparent)]
    Math(#[from] coring_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, CliError>;
