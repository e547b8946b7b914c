use thiserror::Error;

/// Errors raised by the algebra, cohomology and deformation engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational {0:?}: expected \"p\" or \"p/q\"")]
    Rational(String),
    #[error("algebra file: {0}")]
    Format(String),
    #[error("unknown built-in algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("built-in algebra {name} expects {expected} parameter(s), got {got}")]
    Parameters {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("{0} is not a Lie algebra")]
    NotLie(String),
    #[error("{0} is not a Leibniz algebra")]
    NotLeibniz(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("index {index} out of range (1..={max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("algebra is not nilpotent (lower central series {0:?})")]
    NotNilpotent(Vec<usize>),
}

pub type Result<T> = std::result::Result<T, Error>;
