use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix dimensions must be positive")]
    EmptyDimension,

    #[error("matrix is not Hermitian (anti-Hermitian part {0:e})")]
    NotHermitian(f64),

    #[error("non-finite entry in matrix or vector")]
    NonFinite,

    #[error("vector is not normalized (norm {0})")]
    NotUnit(f64),

    #[error("invalid parameter `{name}` = {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("segment parameter t = {0} outside its admissible range")]
    SegmentOutOfRange(f64),

    #[error("parameters are not block-positive")]
    NotBlockPositive,

    #[error("a >= p_theta: the matrix is already positive and is its own SPA")]
    AlreadyPositive,

    #[error("state is not PPT within tolerance (min eigenvalue {0:e})")]
    NotPpt(f64),

    #[error("witness is already PPT and detects no PPT state")]
    AlreadyPpt,

    #[error("at least one restart is required")]
    NoRestarts,

    #[error("p = {0} outside the open interval (1, 2)")]
    POutOfRange(f64),
}
