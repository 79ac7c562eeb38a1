use thiserror::Error;

/// Errors raised by the counting library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two parts of a union share at least one element.
    #[error("parts {first} and {second} overlap (both contain {witness})")]
    Overlap {
        first: usize,
        second: usize,
        witness: u64,
    },

    /// A configured enumeration or memory budget would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Malformed set description.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The chosen count scalar cannot hold an intermediate value.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
