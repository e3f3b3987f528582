use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("value {0} has a non-zero irrational part")]
    NotRational(String),

    #[error("series variables differ: {0} vs {1}")]
    VariableMismatch(String, String),

    #[error("invalid central charge parameters (p, q) = ({p}, {q}): {reason}")]
    InvalidParameters { p: i64, q: i64, reason: String },

    #[error("no singular vector at level {level} for h = {h}")]
    NoSingularVector { h: String, level: usize },

    #[error("weight {0} is not a Kac table weight")]
    NotKacWeight(String),

    #[error("branch {branch} for label ({r}, {s}) is inadmissible: recursion factor vanishes at k = {k}")]
    InadmissibleBranch {
        r: i64,
        s: i64,
        branch: String,
        k: i64,
    },

    #[error("level {given} is too small, need at least {needed}")]
    LevelTooSmall { given: usize, needed: usize },

    #[error("p = {0} must be odd and at least 3")]
    InvalidP(i64),

    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
