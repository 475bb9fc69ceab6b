use thiserror::Error;

/// Errors produced by this crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// An input violates a documented precondition or invariant.
    #[error("domain error: {0}")]
    Domain(String),
    /// A requested enumeration would exceed the configured capacity cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Reading or writing a report or config file failed.
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub fn io(msg: impl Into<String>) -> Self {
        Error::Io(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
