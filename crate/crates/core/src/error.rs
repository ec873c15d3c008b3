use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("scale mismatch: {left} vs {right}")]
    ScaleMismatch { left: i64, right: i64 },

    #[error("subset of size {size} exceeds supported arity {max}")]
    UnsupportedArity { size: usize, max: usize },

    #[error("invalid lambda {0}")]
    InvalidLambda(String),

    #[error("invalid bit {0:?}: expected '0' or '1'")]
    InvalidBit(char),

    #[error("empty code")]
    EmptyCode,

    #[error("duplicate word in code at index {0}")]
    DuplicateWord(usize),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("polynomial of degree {degree} is reducible: divisible by {factor:#b}")]
    ReduciblePolynomial { degree: u32, factor: u32 },

    #[error("polynomial is irreducible but not primitive: alpha has order {order} < {expected}")]
    NonPrimitivePolynomial { order: u32, expected: u32 },

    #[error("no catalog code for n={n}, d={d}; supply a generator matrix file instead")]
    UnsupportedCatalog { n: usize, d: usize },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("cost guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("numerical solver failed: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;
