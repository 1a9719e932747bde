use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("n must be even and at least 2, got {0}")]
    OddSize(usize),
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { n: usize, index: usize },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid reduced word: {0}")]
    InvalidWord(String),
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("mixed variable counts {0} and {1}")]
    VariableMismatch(usize, usize),
    #[error("not divisible by {divisor}; remainder {remainder}")]
    NotDivisible { divisor: String, remainder: String },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("{0}")]
    Inconsistent(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("unknown command {0:?}")]
    UnknownCommand(String),
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
    #[error("not available: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
