use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("unknown type letter '{0}'")]
    UnknownLetter(char),

    #[error("{letter}{rank} is not admissible: {reason}")]
    InadmissibleType {
        letter: char,
        rank: usize,
        reason: String,
    },

    #[error("expected 1 or 2 simple factors, got {0}")]
    FactorCount(usize),

    #[error("node {node} out of range 1..={max}")]
    NodeOutOfRange { node: usize, max: usize },

    #[error("node {0} is not present in the diagram")]
    MissingNode(usize),

    #[error("duplicate mark {0}")]
    DuplicateMark(usize),

    #[error("a marked diagram needs at least one mark")]
    NoMarks,

    #[error("node {0} is not a mark")]
    NotAMark(usize),

    #[error("expected {expected} marks, got {got}")]
    MarkCount { expected: usize, got: usize },

    #[error("vector length {got} does not match rank {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("component on nodes {0:?} matches no simple Dynkin diagram")]
    UnrecognizedComponent(Vec<usize>),

    #[error("blow-up codimension must be at least 2, got {0}")]
    CodimensionTooSmall(i64),

    #[error("element is not homogeneous of top degree {expected}: {detail}")]
    NotTopDegree { expected: u32, detail: String },

    #[error("invalid bundle data: {0}")]
    InvalidBundle(String),

    #[error("invalid expression at column {column}: {message}")]
    Expression { column: usize, message: String },
}
