//! Crate-wide error type.

use crate::balance::IterationRecord;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("rank-deficient input: smallest singular value {smallest:.3e} <= {tol:.1e} * largest ({largest:.3e})")]
    RankDeficient {
        smallest: f64,
        largest: f64,
        tol: f64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("non-finite value at grid point {index}")]
    NonFinite { index: usize },

    #[error("metric not positive at grid point {index}")]
    MetricNotPositive { index: usize },

    #[error("global generation violated at grid point {index}")]
    GlobalGeneration { index: usize },

    #[error("Gram matrix ill-conditioned: cond = {cond:.3e} exceeds {max:.1e}")]
    IllConditioned { cond: f64, max: f64 },

    #[error("solver did not converge after {iterations} iterations; final residual {residual:.3e}")]
    NonConvergence {
        iterations: usize,
        residual: f64,
        trajectory: Vec<IterationRecord>,
    },

    #[error("step size underflow at iteration {iteration}; residual {residual:.3e}")]
    StepUnderflow {
        iteration: usize,
        residual: f64,
        trajectory: Vec<IterationRecord>,
    },

    #[error("least-squares fit residual {residual:.3e} exceeds tolerance {tol:.1e}")]
    FitResidual { residual: f64, tol: f64 },

    #[error("weight lattice size {size} exceeds cap {cap}")]
    LatticeTooLarge { size: u128, cap: u128 },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
