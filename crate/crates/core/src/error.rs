use thiserror::Error;

use crate::dimension::{Dimension, DimensionVector};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch {
        left: DimensionVector,
        right: DimensionVector,
    },

    #[error("magnitude is not finite: {0}")]
    NonFinite(f64),

    #[error("conversion factor for {dimension} must be finite and non-zero, got {factor}")]
    InvalidFactor { dimension: Dimension, factor: f64 },

    #[error("scale factor must be non-zero")]
    ZeroScale,

    #[error("unit system label must not be empty")]
    EmptyUnitSystem,

    #[error("conversion schema is not a registered catalog schema; supply a unit label")]
    UnknownSchema,

    #[error("unknown month: {0}")]
    UnknownMonth(String),

    #[error("a bare magnitude has no dimension vector")]
    BareMagnitude,

    #[error("invalid dimension names: {0}")]
    InvalidNames(String),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown symbol `{symbol}` at byte {offset}; known symbols: {}", known.join(", "))]
    UnknownSymbol {
        symbol: String,
        offset: usize,
        known: Vec<String>,
    },

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("registry line {line}: {message}")]
    Registry { line: usize, message: String },
}
