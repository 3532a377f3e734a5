use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),

    #[error("coweight {0} is not dominant")]
    NotDominant(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("wrong rank: expected {expected}, got {got}")]
    WrongRank { expected: usize, got: usize },

    #[error("index {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error(
        "kappa mismatch: x has class {x} but b has class {b}; \
         b and x must lie in the same connected component"
    )]
    KappaMismatch { x: String, b: String },

    #[error("budget of {0} nodes exhausted")]
    BudgetExhausted(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
