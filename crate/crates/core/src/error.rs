use thiserror::Error;

/// Errors raised by the library.
///
/// The variants line up with the CLI exit-code contract: `Input` and
/// `Unsupported` are input errors, `Resource` is a resource limit, and
/// `Internal` signals a broken invariant inside the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn dims(what: &str, expected: usize, got: usize) -> Self {
        Error::Input(format!("{what}: expected length {expected}, got {got}"))
    }
}
