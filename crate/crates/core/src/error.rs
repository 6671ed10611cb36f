use thiserror::Error;

use crate::triplet::Var;

#[derive(Debug, Error)]
pub enum Error {
    #[error("integer overflow in cyclotomic arithmetic")]
    Overflow,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported dimension {0}; only 2 and 4 are handled")]
    UnsupportedDimension(usize),
    #[error("the zero vector is not a state")]
    ZeroKet,
    #[error("matrix `{0}` is not unitary up to a positive real scale")]
    NotUnitary(String),
    #[error("malformed gate description: {0}")]
    MalformedGate(String),
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("assignment has no value for variable {0}")]
    MissingVariable(Var),
    #[error("conflicting constraints force both values on {component} at assignment #{assignment}")]
    ConflictingConstraints { component: String, assignment: usize },
    #[error("representation `{name}` expects {expected} triplet(s), got {found}")]
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
