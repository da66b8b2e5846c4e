//! File formats, region scans and thread-parallel restarts for
//! `spa-lab-core`. The `spa-lab` binary is a thin front end over this crate.

pub mod json;
pub mod parallel;
pub mod parse;
pub mod scan;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] spa_lab_core::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("matrix json has {found} entries, expected {expected} for m = {m}, n = {n}")]
    EntryCount { m: usize, n: usize, expected: usize, found: usize },
    #[error("invalid thread count {0:?} in SPA_LAB_THREADS")]
    Threads(String),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("scan resolution must be at least 2, got {0}")]
    Resolution(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
