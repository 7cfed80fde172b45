use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-domain input.
    #[error("input error: {0}")]
    Input(String),
    /// The prime divides the discriminant where an unramified prime is required.
    #[error("prime {p} is ramified (divides the discriminant)")]
    Ramified { p: u64 },
    /// A hypothesis of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The computation would exceed the configured size limits.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An internal consistency check failed. Always a bug.
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
