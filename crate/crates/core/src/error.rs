use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: expected sqrt({expected}), found sqrt({found})")]
    FieldMismatch { expected: u64, found: u64 },

    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,

    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,

    #[error("singular matrix: no pivot in column {column}")]
    Singular { column: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("not a Belyi function: {extra} units of ramification outside 0, 1, infinity")]
    NotBelyi { extra: usize },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("usage error: {0}")]
    Usage(String),
}
