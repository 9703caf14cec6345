use thiserror::Error;

/// Errors produced while validating inputs, building indexes or answering queries.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid series `{id}`: {reason}")]
    InvalidSeries { id: String, reason: String },

    #[error("invalid radius {0}: must be finite and non-negative")]
    InvalidRadius(f64),

    #[error("complexity must be at least 2, got {0}")]
    InvalidComplexity(usize),

    #[error("series `{id}` has canonical complexity {canonical_len}, exceeding the configured {target}")]
    CanonicalTooLong { id: String, canonical_len: usize, target: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("predicate {0} has no interval simplification")]
    UnsupportedKind(String),

    #[error("{count} valid cell sequences exceed the cap of {cap}")]
    ComplexityTooLarge { count: u128, cap: u64 },

    #[error("duplicate identifier {0}")]
    DuplicateId(String),

    #[error("shape violation: {0}")]
    ShapeViolation(String),

    #[error("rectangle {0} is empty")]
    EmptyRectangle(u32),

    #[error("coordinate {0} lies outside the unit box")]
    OutOfUnitBox(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
