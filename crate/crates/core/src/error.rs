use thiserror::Error;

use crate::hypercomplex::ScalarKind;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("scalar kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: ScalarKind, found: ScalarKind },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("size {size} exceeds the cap of {cap}")]
    Size { size: usize, cap: usize },

    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
