use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{what} has a pole at {at}")]
    Pole { what: &'static str, at: String },
    #[error("quadrature did not reach tolerance: {0}")]
    Quadrature(String),
    #[error("numerical degeneracy: {0}")]
    Degenerate(String),
    #[error("series truncated too early: {0}")]
    Truncation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
