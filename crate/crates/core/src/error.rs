use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("element index {index} out of range (poset has {len} elements)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("state space exceeds cap of {cap} states")]
    ResourceLimit { cap: usize },

    #[error("not a linear extension: {0}")]
    InvalidExtension(String),

    #[error("poset is not ranked")]
    NotRanked,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid sweep order: {0}")]
    InvalidSweep(String),

    #[error("label {label} out of range 1..{q}")]
    LabelRange { label: u32, q: u32 },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
