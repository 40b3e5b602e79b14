use thiserror::Error;

use crate::combinatorics::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{what} must be at least {min}, got {value}")]
    TooSmall {
        what: &'static str,
        min: usize,
        value: usize,
    },

    #[error("{alpha} is not obtained from {mu} by removing a single cell")]
    NotABranch { mu: Partition, alpha: Partition },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("permutation {0} does not fix the last point")]
    NotInSubgroup(String),

    #[error(
        "no Schur-Weyl copy of {mu}/{alpha} in dimension {d}: the eigenvalue ratio is undefined"
    )]
    Inadmissible {
        mu: Partition,
        alpha: Partition,
        d: usize,
    },

    #[error("tensor space of dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
