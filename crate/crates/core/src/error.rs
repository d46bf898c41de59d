use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Dyck word {word:?}: {reason}")]
    InvalidWord { word: String, reason: &'static str },

    #[error("invalid partition {0:?}")]
    InvalidPartition(String),

    #[error("partition {partition} does not fit in the staircase of size {n}")]
    OutsideStaircase { partition: String, n: usize },

    #[error("size mismatch: expected words of half-length {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("{what} enumeration refused: size {n} exceeds the configured bound {max}")]
    BoundExceeded { what: &'static str, n: usize, max: usize },

    #[error("invalid puzzle: {0}")]
    InvalidPuzzle(String),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("degree-unbalanced boundary (d(sigma) + d(tau) = {lhs}, d(pi) = {rhs}): no puzzle preimage guaranteed")]
    Unbalanced { lhs: usize, rhs: usize },

    #[error("configuration is not in the image of phi: {0}")]
    NotInImage(String),

    #[error("local rule table violates the {invariant} invariant: {detail}")]
    RuleTable { invariant: &'static str, detail: String },

    #[error("interpolation needs at least {need} distinct points, got {got}")]
    InsufficientPoints { need: usize, got: usize },

    #[error("invalid settings: {0}")]
    Config(String),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { context: context.into(), source }
    }
}
