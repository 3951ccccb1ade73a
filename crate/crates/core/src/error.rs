use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A computation ran past its wall-clock budget.
    #[error("budget of {0:.1}s exceeded")]
    Timeout(f64),

    /// The ideal is the unit ideal, so its variety is empty.
    #[error("the ideal contains 1; the variety is empty")]
    UnitIdeal,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
