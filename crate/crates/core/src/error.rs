use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid Pauli character {0:?}")]
    InvalidPauliChar(char),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("unknown name {0:?}")]
    UnknownName(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("distance unknown")]
    UnknownDistance,

    #[error("code has no CSS form")]
    NotCss,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
