use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("invalid input: {0}")]
    Input(String),
    /// Brute-force enumeration would exceed the configured state cap.
    #[error("state space too large: {states} assignments exceed the cap of {cap}")]
    TooLarge { states: String, cap: u64 },
    #[error("duplicate interpolation nodes; collapse duplicates first")]
    DuplicateNodes,
    #[error("no polynomial algorithm; use brute force explicitly")]
    NoPolynomialAlgorithm,
    #[error("planar embedding required: {0}")]
    MissingEmbedding(String),
    /// A mathematical precondition failed (singular matrix, violated lattice condition, ...).
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
