use thiserror::Error;

use crate::adinkra::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unknown code name {0:?}")]
    UnknownCode(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource guard exceeded: {0} (set ADINKRA_GUARD_OVERRIDE=1 to lift)")]
    Guard(String),

    #[error("no totally odd signature exists: {0}")]
    Infeasible(String),

    #[error("not a valid Adinkra:\n{0}")]
    Invalid(ValidationReport),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("matrix is singular")]
    Singular,

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("golden mismatch:\n{0}")]
    Mismatch(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
