use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("matrix is not invertible over its ring: {0}")]
    NotInvertible(String),

    #[error("word context mismatch: expected {expected}, found {found}")]
    ContextMismatch { expected: String, found: String },

    #[error("generator index {index} out of range 1..={max}")]
    GeneratorRange { index: usize, max: usize },

    #[error("word does not stabilize the distinguished puncture")]
    NotStabilizer,

    #[error("relation `{name}` does not evaluate to the identity ({detail})")]
    RelationFailed { name: String, detail: String },

    #[error("refused: {0}")]
    Refused(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A state the two-channel oracle proves impossible; reaching it means a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
