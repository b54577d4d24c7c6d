use thiserror::Error;

/// Errors produced by graph loading and the clique algorithms.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ranking has length {got}, graph has {expected} vertices")]
    RankingLength { expected: usize, got: usize },

    #[error("ranking is not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("oracle refuses graph with {n} vertices (limit {limit})")]
    OracleLimit { n: usize, limit: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
