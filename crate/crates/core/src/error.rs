use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition parts must be positive")]
    ZeroPart,

    #[error("value {value} exceeds the size cap {cap}")]
    TooLarge { value: u64, cap: u64 },

    #[error("compositions of size {left} and {right} live in different degrees")]
    SizeMismatch { left: usize, right: usize },

    #[error("the empty composition has no tail")]
    EmptyTail,

    #[error("entry {0} is negative and cannot be compacted into a composition")]
    NegativeEntry(i64),

    #[error("expected a vector of length {expected}, got length {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("descent {descent} is outside 1..{n}")]
    InvalidDescent { descent: usize, n: usize },

    #[error("degree {degree} exceeds the transition cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("the inverse transition matrix in degree {0} is not integral")]
    NonIntegral(usize),

    #[error("{0} is not a partition; use the general skew expansion instead")]
    NotPartition(String),

    #[error("s must be positive")]
    ZeroSkew,

    #[error("unknown basis tag `{0}`")]
    UnknownBasis(String),

    #[error("unknown method `{0}`")]
    UnknownMethod(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
