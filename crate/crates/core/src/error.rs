use thiserror::Error;

use crate::classifier::Rejection;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("|{0}| exceeds the supported envelope of 10^12")]
    EnvelopeExceeded(i128),

    #[error("input must be nonzero")]
    ZeroInput,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{value} is not a C4xC4 group determinant ({reason})")]
    NotAttainable { value: i128, reason: Rejection },

    #[error("factorization does not reconstruct {0}")]
    FactorizationMismatch(i128),

    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
}
