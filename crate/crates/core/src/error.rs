use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: expected n = {expected}, found n = {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("{what} {value} is out of range 1..={n}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        n: usize,
    },

    #[error("not a permutation of 1..={n}: {word:?}")]
    NotABijection { n: usize, word: Vec<usize> },

    #[error("point {0} repeated in cycle")]
    RepeatedPoint(usize),

    #[error("{what}: n = {n} exceeds the ceiling {ceiling}")]
    CeilingExceeded {
        what: &'static str,
        n: usize,
        ceiling: usize,
    },

    #[error("enumeration budget exceeded: {what} needs {needed} items, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("invalid PI spec: {0}")]
    InvalidSpec(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("empty domain: {0}")]
    EmptyDomain(String),

    #[error("eigenvalue {value} is not within {tolerance:e} of an integer")]
    IntegralityViolation { value: f64, tolerance: f64 },

    #[error("boundary keys: {0}")]
    Boundary(String),

    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}
