use std::path::PathBuf;

use cliquepoly::CatalogError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
    #[error("{context}: {source}")]
    Parse { context: String, source: CatalogError },
    #[error("{0}")]
    Usage(String),
}
