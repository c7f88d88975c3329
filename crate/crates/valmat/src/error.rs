use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Structurally or semantically invalid input.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An exact-mode operation met a non-integer valuation or a relaxed-only
    /// request; the message tells the caller how to opt into relaxed mode.
    #[error("mode error: {0}")]
    Mode(String),
    /// A randomized generator exhausted its retry budget.
    #[error("generation failed: {0}")]
    Generation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
