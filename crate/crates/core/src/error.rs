use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a nonzero weight")]
    ZeroWeight,

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("duplicate weight key {0:?}")]
    DuplicateWeight(Vec<i64>),

    #[error("unknown element: {0}")]
    UnknownElement(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("use h0/h1 for cohomological degree {0}")]
    LowDegree(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
