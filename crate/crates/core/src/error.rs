use thiserror::Error;

use crate::poly::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index or truncation level outside the domain of the requested object.
    #[error("domain error: {0}")]
    Domain(String),

    /// A closed form produced a non-integral quotient or an odd value that
    /// must be halved. Always indicates a transcription bug.
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("numerical instability: {0}")]
    NumericalInstability(String),

    #[error("series expansion error: {0}")]
    Expansion(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
