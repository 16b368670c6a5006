use thiserror::Error;

use crate::grading::GroupElement;

/// Errors raised while building or transforming graded structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("coordinate count mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("group spec mismatch between operands")]
    SpecMismatch,

    #[error("sigma is not defined at ({alpha}, {beta}); enlarge the table")]
    SupportMiss { alpha: GroupElement, beta: GroupElement },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("negative exponent {0} cannot be shifted inside polynomials")]
    NegativeExponent(i64),

    #[error("unknown example id `{0}`")]
    UnknownExample(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
