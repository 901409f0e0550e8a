use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are grouped so that a front end can map them onto exit
/// statuses: [`Error::Capacity`] is a resource limit, [`Error::Internal`] is
/// a broken invariant (a bug), everything else is bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("hypergraph is not atomic: missing singleton {{{0}}}")]
    NotAtomic(String),

    #[error("hypergraph is not connected")]
    Disconnected,

    #[error("capacity exceeded: {needed} vertices requested, cap is {cap}")]
    Capacity { needed: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid construct: {0}")]
    InvalidConstruct(String),

    #[error("term error: {0}")]
    Term(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidConstruct(msg.into())
    }

    pub(crate) fn term(msg: impl Into<String>) -> Self {
        Error::Term(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
