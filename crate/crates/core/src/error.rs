use thiserror::Error;

/// Errors surfaced by the library.
///
/// `InvalidDatum` is a classification error: the offending divisor or
/// parity rule is spelled out in the message. `Inapplicable` is distinct
/// from failure; it marks configurations a verification routine cannot
/// speak about (repeated or irrational pencil roots, for example).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group datum: {0}")]
    InvalidDatum(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("cannot mix exact and floating accumulation in one sum")]
    BackendMismatch,

    #[error("inapplicable configuration: {0}")]
    Inapplicable(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
