use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity {n} exceeds the configured maximum {max}")]
    ArityTooLarge { n: usize, max: usize },

    #[error("point {point:#x} out of range for arity {arity}")]
    PointOutOfRange { point: u32, arity: usize },

    #[error("variable index {index} out of range 1..={arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("value mask {values:#x} not contained in fixed mask {fixed:#x}")]
    InvalidAssignment { fixed: u32, values: u32 },

    #[error("polynomial evaluates to {value} at point {point:#x}; not 0/1-valued")]
    NotBooleanValued { point: u32, value: i64 },

    #[error("variable {index} belongs to the restriction set")]
    VariableInRestriction { index: usize },

    #[error("variable {index} is irrelevant")]
    IrrelevantVariable { index: usize },

    #[error("function is constant")]
    ConstantFunction,

    #[error("arity {n} exceeds the exact block-sensitivity limit {limit}")]
    ArityTooLargeForExact { n: usize, limit: usize },

    #[error("arity {n} exceeds the search limit {limit}")]
    ArityTooLargeForSearch { n: usize, limit: usize },

    #[error("set {set:#x} is not a maxonomial hitting set")]
    NotAHittingSet { set: u32 },

    #[error("hitting set of size {given} is not minimum; size {minimum} is achievable")]
    NotMinimum { given: usize, minimum: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
