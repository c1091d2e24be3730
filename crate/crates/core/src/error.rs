use thiserror::Error;

/// Errors raised by the supertropical engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not invertible (only tangible elements are)")]
    NotInvertible(String),

    #[error("root of order {0} is undefined")]
    InvalidRootOrder(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("size {size} exceeds the enumeration bound {bound} for {what}")]
    SizeBound {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("column {column} is not in the index set of eigenvalue {eigenvalue}")]
    ColumnNotInIndexSet { column: usize, eigenvalue: String },

    #[error("{0} is not a tangible eigenvalue with an index set")]
    NotAnEigenvalue(String),

    #[error("exponent {exponent} is not a multiple of {factorial} (= {n}!)")]
    NotFactorialMultiple {
        exponent: u64,
        n: usize,
        factorial: u64,
    },

    #[error("only {found} of {needed} eigenvectors could be extracted")]
    IncompleteEigenbasis { found: usize, needed: usize },

    #[error("characteristic polynomial has a ghost essential coefficient and cannot be fully factored")]
    NotFactorizable,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
