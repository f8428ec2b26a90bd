//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide error type.
///
/// The variants correspond to how the CLI reports failures: everything
/// except [`Error::Internal`] is a problem with the request (bad input,
/// unsupported combination, or a size cap), while `Internal` means an
/// exact-arithmetic invariant that should be unbreakable was broken.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside an operation's domain (e.g. `n = 0`, mismatched degrees).
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally valid input that names something this build does not do.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Request exceeds a deliberate size cap.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Malformed text encoding of a partition, cycle type, or walk file.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal invariant failed; indicates a bug rather than bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
