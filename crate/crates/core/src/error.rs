use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("word length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid word length {0} (supported: 1..=64)")]
    InvalidLength(usize),
    #[error("invalid position {pos} for length {len}")]
    InvalidPosition { pos: usize, len: usize },
    #[error("weight precondition violated: expected weight {expected}, got {actual}")]
    WeightPrecondition { expected: usize, actual: usize },
    #[error("empty code")]
    EmptyCode,
    #[error("seed word is not a member of the code")]
    SeedNotInCode,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal verification failed: {0}")]
    Verification(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("nothing to certify: LP optimum {optimum} is below target {target}")]
    BelowTarget { optimum: String, target: String },
    #[error("certificate mismatch: {0}")]
    Misaligned(String),
    #[error("dual block `{0}` is not positive semidefinite")]
    NotPsd(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
