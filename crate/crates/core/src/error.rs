//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch at step {step}: {what}")]
    DimensionMismatch { step: usize, what: String },

    #[error(
        "measurement matrix rank-deficient at step {step}: smallest singular value {sigma_min:.3e}"
    )]
    RankDeficient { step: usize, sigma_min: f64 },

    #[error("matrix is not symmetric positive definite: {0}")]
    NotSpd(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported noise family: {0}")]
    UnsupportedFamily(String),

    #[error("subsampling stride must be >= 2 to keep residues uncorrelated, got {0}")]
    IndependenceGap(usize),

    #[error("subsampling selected no residues")]
    EmptySelection,

    #[error("degenerate bandwidth: zero sample variance in dimension {0}")]
    DegenerateBandwidth(usize),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("zero smoothness coefficient requires an analytic characteristic-function denominator")]
    ZeroEpsilonDenominator,

    #[error("tuning failed: none of the {candidates} candidate pairs produced a usable density")]
    TuningFailed { candidates: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("data error at row {row}: {what}")]
    Data { row: usize, what: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}
