use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the library. Every variant corresponds to a violated
/// precondition; none of them signal an arithmetic failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator must have constant term 1, found {constant}")]
    NonUnitConstantTerm { constant: BigInt },

    #[error("coefficient index {index} exceeds truncation order {order}")]
    IndexBeyondOrder { index: i64, order: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("level m={m} is below the required minimum {min}")]
    LevelTooSmall { m: usize, min: usize },

    #[error("index r={r} must be smaller than the level m={m}")]
    IndexNotBelowLevel { r: usize, m: usize },

    #[error("part {part} exceeds the level m={m}")]
    PartExceedsLevel { part: usize, m: usize },

    #[error("vertex {vertex} lies outside the strip 0..={max}")]
    VertexOutOfStrip { vertex: usize, max: usize },

    #[error("oracle size guard: {what}={value} exceeds the limit {limit}")]
    OracleLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid strip walk: {0}")]
    InvalidWalk(String),

    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),

    #[error("invalid Dyck constraint: {0}")]
    InvalidConstraint(String),

    #[error("signed formula needs a nonnegative denominator exponent, found k={k}")]
    NegativeExponent { k: i64 },

    #[error("denominator exponent k={k} leaves no pair slots")]
    NoPairSlots { k: i64 },

    #[error("quotient is not eventually positive (class {class})")]
    NotEventuallyPositive { class: String },

    #[error("invalid pair decomposition: {0}")]
    InvalidPairs(String),

    #[error("invalid family query: {0}")]
    InvalidFamily(String),

    #[error("route {route} disagrees with the division route at degree {index}")]
    RouteMismatch { route: &'static str, index: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
