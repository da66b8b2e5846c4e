//! Numerics for block-positive matrices on `C^m ⊗ C^n`: the three-parameter
//! witness family `W[a,b,c;θ]` on `M_3 ⊗ M_3`, the segment from the identity
//! to a witness, structural physical approximations (SPAs), product-vector
//! searches and the catalog of PPT-type witnesses whose SPA is entangled.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! thread-parallel restart execution live in the `spa-lab` crate.
#![no_std]
#![deny(rust_2018_idioms, unused_must_use)]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod error;
pub mod hermitian;
pub mod linalg;
pub mod product;
pub mod spa;
pub mod witness;

pub use catalog::{
    enumerate_counterexamples, find_detected_ppt_state, solve_case_i, solve_case_ii,
    verify_counterexample, CaseSolution, CaseTag, Detection, StageResult, VerificationBudget,
    VerificationDossier,
};
pub use error::{Error, Result};
pub use hermitian::{BipartiteMatrix, ComplexScalar, Spectrum};
pub use linalg::{DenseMatrix, EigenConfig, Eigh};
pub use product::{
    edge_state_residual, is_entangled_by_edge_criterion, minimize_product_expectation,
    spanning_rank, zero_product_vectors, EdgeVerdict, ProductVector, RestartExecutor,
    SearchConfig, SearchOutcome, Searcher, Sequential,
};
pub use spa::{alpha_numeric, beta_numeric, classify, segment_at, SegmentPoint, SpaReport};
pub use witness::{
    alpha_closed_form, beta_closed_form, build_witness, classify_family,
    is_block_positive_closed_form, is_ppt_closed_form, p_theta, q_theta, spa_closed_form,
    theta_for_p, FamilyClassification, WitnessParams, WitnessType,
};
