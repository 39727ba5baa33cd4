use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation window {0:?}: expected a rearrangement of 1..n")]
    InvalidPermutation(Vec<usize>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cross ({row},{col}) lies outside the staircase of a size-{n} pipe dream")]
    CrossOutOfBounds { row: usize, col: usize, n: usize },

    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("polynomial division by x{0} - x{1} left a non-zero remainder")]
    InexactDivision(usize, usize),

    #[error("word {0:?} is not a reduced word for any permutation of the given size")]
    NotReduced(Vec<usize>),

    #[error("sequence {beta:?} is not compatible with word {word:?}")]
    NotCompatible { word: Vec<usize>, beta: Vec<usize> },

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("pipe dream is not highest weight")]
    NotHighestWeight,

    #[error(
        "truncation algorithm could not place cross from row {row}, column {col} (round {round})"
    )]
    Unplaceable {
        row: usize,
        col: usize,
        round: usize,
    },

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
