use thiserror::Error;

use crate::qpoly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Long division left a nonzero remainder.
    #[error("exact division failed: nonzero remainder {remainder}")]
    NotDivisible { remainder: IntPoly },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial degree {degree} exceeds bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },

    #[error("index must be non-negative, got {0}")]
    NegativeIndex(i64),

    #[error("argument out of range: {0}")]
    InvalidRange(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
