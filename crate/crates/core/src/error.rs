use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("invalid letter {letter:?} at position {position} (alphabet is 1..={max})")]
    InvalidLetter {
        position: usize,
        letter: String,
        max: usize,
    },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: String, rank: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
