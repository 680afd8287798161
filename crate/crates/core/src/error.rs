use num_rational::BigRational;
use thiserror::Error;

use crate::scalars::Var;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pole at {var} = {value} in {expr}")]
    Pole {
        var: Var,
        value: BigRational,
        expr: String,
    },

    #[error("rewriting did not terminate within {steps} steps")]
    NonTerminating { steps: usize },

    #[error("cannot orient relation {relation}: {reason}")]
    Orientation { relation: String, reason: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("syntax error at byte {offset}: expected {}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
    },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("generator `{name}` already registered with the other parity")]
    ParityConflict { name: String },

    #[error("relation is not parity-homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("unsupported generator `{0}`")]
    UnsupportedGenerator(String),

    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown relation family `{0}`")]
    UnknownFamily(String),

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("presentation file line {line}: {message}")]
    Format { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
