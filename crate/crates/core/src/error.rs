use thiserror::Error;

/// Failures reported by the query and materialization routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Materializing the requested word would exceed the configured letter cap.
    #[error("resource error: {requested} letters requested, cap is {cap}")]
    Resource { requested: String, cap: u64 },
    /// The word does not occur in the Fibonacci word.
    #[error("not a factor of the Fibonacci word: {0}")]
    NotAFactor(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
