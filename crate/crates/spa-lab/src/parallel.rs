//! Rayon-backed restart executor.

use rayon::prelude::*;
use spa_lab_core::product::LocalMinimum;
use spa_lab_core::RestartExecutor;

use crate::{Error, Result};

/// Caps the number of worker threads.
pub const THREADS_ENV: &str = "SPA_LAB_THREADS";

/// Runs restarts on a rayon pool. Output is independent of the thread count
/// since results are merged by restart index.
#[derive(Debug, Default)]
pub struct Parallel {
    pool: Option<rayon::ThreadPool>,
}

impl Parallel {
    /// Uses the global pool.
    pub fn new() -> Self {
        Self { pool: None }
    }

    pub fn with_threads(threads: usize) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
        Ok(Self { pool: Some(pool) })
    }

    /// Reads [`THREADS_ENV`]; unset means the global pool.
    pub fn from_env() -> Result<Self> {
        match std::env::var(THREADS_ENV) {
            Ok(raw) => match raw.trim().parse::<usize>() {
                Ok(n) if n > 0 => Self::with_threads(n),
                _ => Err(Error::Threads(raw)),
            },
            Err(_) => Ok(Self::new()),
        }
    }
}

impl RestartExecutor for Parallel {
    fn run(&self, restarts: usize, job: &(dyn Fn(usize) -> LocalMinimum + Sync)) -> Vec<LocalMinimum> {
        let work = || (0..restarts).into_par_iter().map(job).collect();
        match &self.pool {
            Some(pool) => pool.install(work),
            None => work(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spa_lab_core::{build_witness, SearchConfig, Searcher, Sequential, WitnessParams};

    #[test]
    fn matches_sequential_bitwise() {
        let w = build_witness(&WitnessParams::new(0.5, 1.2, 0.4, 0.3).unwrap());
        let cfg = SearchConfig::new(40, 11);
        let seq = Searcher::new(cfg, &Sequential).minimize(&w).unwrap();
        for threads in [1, 3] {
            let pool = Parallel::with_threads(threads).unwrap();
            let par = Searcher::new(cfg, &pool).minimize(&w).unwrap();
            assert_eq!(seq.best_value.to_bits(), par.best_value.to_bits());
            assert_eq!(seq.converged_minima, par.converged_minima);
        }
    }
}
