use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero ideal: the generator list is empty")]
    ZeroIdeal,

    #[error("unit ideal: a generator is the constant monomial 1")]
    UnitIdeal,

    #[error("arithmetic overflow: exponent exceeds {}", u16::MAX)]
    Overflow,

    #[error("not equigenerated: generator degrees {degrees:?}")]
    NotEquigenerated { degrees: Vec<u32> },

    #[error("characteristic {0} is not a prime")]
    NotPrime(u64),

    #[error("empty Betti table")]
    EmptyTable,

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input contract violated: {0}")]
    Contract(String),

    #[error("resource limit exceeded: {what} ({found} > {limit})")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        found: usize,
    },

    #[error("inclusion-exclusion refused: {generators} generators exceed the cutoff {cutoff}")]
    CutoffExceeded { generators: usize, cutoff: usize },

    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// A syntax or semantic error in one of the text formats, with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}
