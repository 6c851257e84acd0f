use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range caller input.
    #[error("input error: {0}")]
    Input(String),

    /// Input is well formed but outside the domain an operation supports
    /// (for example a non-quartic ball handed to a quartic-only routine).
    #[error("domain error: {0}")]
    Domain(String),

    /// The graph is disconnected where connectivity is required.
    #[error("graph is disconnected (infinite diameter)")]
    Disconnected,

    /// An internal invariant failed. Never expected for valid inputs.
    #[error("internal consistency error: {0}")]
    Inconsistent(String),

    /// A reproduced value disagrees with the published classification.
    #[error("verification failed for {graph}: {field} expected {expected}, got {actual}")]
    Verification {
        graph: String,
        field: String,
        expected: String,
        actual: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
