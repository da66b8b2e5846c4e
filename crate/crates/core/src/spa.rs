//! Family-agnostic segment machinery: `W_t = (1 - t)·1 + t·W`, the distances
//! `α_W` (last positive point) and `β_W` (last copositive point) found by
//! bisection, and the positive/copositive/PPT type classification.
//!
//! The segment uses the unnormalized identity. Positivity along the segment
//! does not depend on that choice; [`SpaReport::spa_state`] gives the
//! trace-one SPA for callers that want a density matrix.

use crate::error::{Error, Result};
use crate::hermitian::{BipartiteMatrix, RANK_THRESHOLD};
use crate::witness::{type_from_distances, WitnessType};

/// `|α - β|` at or below this is reported as PPT type.
pub const TYPE_TIE: f64 = 1e-8;
/// Positivity tolerance used for `spa_is_ppt`.
pub const PSD_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BisectionConfig {
    pub iterations: usize,
    /// `W_t` counts as positive while its minimum eigenvalue is `>= -predicate_tol`.
    pub predicate_tol: f64,
}

impl Default for BisectionConfig {
    fn default() -> Self {
        Self { iterations: 60, predicate_tol: 1e-11 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SegmentPoint {
    pub t: f64,
    pub matrix: BipartiteMatrix,
}

pub fn segment_at(w: &BipartiteMatrix, t: f64) -> Result<SegmentPoint> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::SegmentOutOfRange(t));
    }
    Ok(SegmentPoint { t, matrix: w.toward_identity(t) })
}

/// Largest `t` (up to bisection width) with `W_t` positive.
pub fn alpha_numeric(w: &BipartiteMatrix) -> f64 {
    alpha_numeric_with(w, &BisectionConfig::default())
}

pub fn alpha_numeric_with(w: &BipartiteMatrix, cfg: &BisectionConfig) -> f64 {
    last_positive_point(w, cfg)
}

/// Largest `t` with `W_t` copositive, i.e. `α` of `W^Γ`.
pub fn beta_numeric(w: &BipartiteMatrix) -> f64 {
    beta_numeric_with(w, &BisectionConfig::default())
}

pub fn beta_numeric_with(w: &BipartiteMatrix, cfg: &BisectionConfig) -> f64 {
    last_positive_point(&w.partial_transpose(), cfg)
}

/// Positive points of the segment form a sub-segment containing `t = 0`,
/// so the predicate is monotone and bisection on `[0, 1]` applies.
fn last_positive_point(w: &BipartiteMatrix, cfg: &BisectionConfig) -> f64 {
    let positive = |t: f64| w.toward_identity(t).min_eigenvalue() >= -cfg.predicate_tol;
    if positive(1.0) {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..cfg.iterations {
        let mid = 0.5 * (lo + hi);
        if positive(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpaReport {
    pub alpha: f64,
    pub beta: f64,
    pub witness_type: WitnessType,
    /// `W_α` with the unnormalized identity.
    pub spa_matrix: BipartiteMatrix,
    pub spa_is_ppt: bool,
    /// `(rank W_α, rank W_α^Γ)`.
    pub rank_signature: (usize, usize),
}

impl SpaReport {
    pub fn spa_state(&self) -> BipartiteMatrix {
        self.spa_matrix.normalized().expect("SPA has positive trace")
    }
}

/// Full SPA report for a block-positive `W` (not verified here).
pub fn classify(w: &BipartiteMatrix) -> SpaReport {
    classify_with(w, &BisectionConfig::default())
}

pub fn classify_with(w: &BipartiteMatrix, cfg: &BisectionConfig) -> SpaReport {
    let alpha = alpha_numeric_with(w, cfg);
    let beta = beta_numeric_with(w, cfg);
    let spa_matrix = w.toward_identity(alpha);
    let spa_gamma = spa_matrix.partial_transpose();
    let gamma_spectrum = spa_gamma.spectrum();
    SpaReport {
        alpha,
        beta,
        witness_type: type_from_distances(alpha, beta, TYPE_TIE),
        spa_is_ppt: gamma_spectrum.min() >= -PSD_TOL,
        rank_signature: (
            spa_matrix.numerical_rank(RANK_THRESHOLD),
            gamma_spectrum.numerical_rank(RANK_THRESHOLD),
        ),
        spa_matrix,
    }
}
