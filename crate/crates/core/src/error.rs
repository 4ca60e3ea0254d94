use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter is outside the domain of the operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The input does not define a cubic field.
    #[error("degenerate: {0}")]
    Degenerate(String),
    /// Two independent computations of the same quantity disagree.
    #[error("consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
