use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-domain input (bad exponent lengths, unit ideal
    /// where a proper one is required, parse failures, ...).
    #[error("input error: {0}")]
    Input(String),

    /// A documented operation precondition was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A configured resource cap was exceeded.
    #[error("resource cap `{cap}` exceeded: limit {limit}, needed {needed}")]
    Resource {
        cap: &'static str,
        limit: usize,
        needed: usize,
    },

    /// An internal cross-check failed. This signals a bug, never bad input.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
