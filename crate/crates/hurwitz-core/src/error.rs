//! Error type shared by every module of the crate.

/// Crate-wide error enum.
///
/// The three variants deliberately mirror the three failure classes exposed
/// by the command-line tool: malformed input, mathematically out-of-range
/// input, and aborted-by-resource-guard.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Structurally invalid input: unparsable text, mismatched dimensions,
    /// empty collections where at least one element is required, and so on.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Input that parses fine but violates a mathematical hypothesis of the
    /// requested operation (for example a formula applied outside the range
    /// in which it is proved).
    #[error("domain error: {0}")]
    Domain(String),

    /// A computation was aborted because it exceeded an explicit resource
    /// guard (search-node budget, polynomial term budget, grid size).
    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),
}

impl Error {
    /// Convenience constructor for [`Error::InvalidInput`].
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Convenience constructor for [`Error::Domain`].
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Convenience constructor for [`Error::ResourceGuard`].
    pub fn guard(msg: impl Into<String>) -> Self {
        Error::ResourceGuard(msg.into())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
