use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("degree {degree} exceeds truncation bound {bound}")]
    TruncationExceeded { degree: u32, bound: u32 },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("value {0} is not representable in the active field")]
    NotRepresentable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("the zero ideal has no {0}")]
    ZeroIdeal(&'static str),

    #[error("constant generators are not allowed; use Ideal::unit")]
    UnitGenerator,

    #[error("ideal does not define a zero-dimensional scheme: {0}")]
    NotZeroDimensional(String),

    #[error("duplicate points {0} and {1}")]
    DuplicatePoints(usize, usize),

    #[error("genericity battery failed after {attempts} attempts: {reason}")]
    GenericityExhausted { attempts: usize, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("work estimate {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u64, budget: u64 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
