use thiserror::Error;

/// Errors raised by the exact resistance toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no closed formula for {family} pair ({i}, {j}): {hint}")]
    UnsupportedPair {
        family: String,
        i: usize,
        j: usize,
        hint: String,
    },

    #[error("initial value at index {index} does not satisfy the recursion")]
    InconsistentInitials { index: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
