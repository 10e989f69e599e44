//! Error type shared by all modules.

use crate::young::CosetId;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("shape has {shape} cells but weight has {weight}")]
    SizeMismatch { shape: usize, weight: usize },

    #[error("inner shape is not contained in the outer shape")]
    InnerNotContained,

    #[error("{what} requires n >= {min}, got {got}")]
    DegreeTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("{what} supports n <= {max}, got {got}")]
    DegreeTooLarge {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("cycle type has no part of size >= 2")]
    NothingToFragment,

    #[error("target {target:?} is not the stationary coset of this walk at time {t}")]
    TargetMismatch { target: CosetId, t: usize },

    #[error("no time t <= {limit} certifies distance <= {eps}")]
    MixingTimeNotFound { limit: usize, eps: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
