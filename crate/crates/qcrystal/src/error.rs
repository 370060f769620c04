use crate::tableaux::Cell;
use thiserror::Error;

/// Errors surfaced by validation, parsing, and verification routines.
///
/// Internal inconsistencies (an operator selecting a letter it cannot act
/// on, a rectification slide with no applicable rule) are bugs, not data
/// conditions, and panic instead of returning one of these.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: parts must be weakly decreasing and positive, got {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("invalid strict partition: parts must be strictly decreasing and positive, got {0:?}")]
    InvalidStrictPartition(Vec<usize>),

    #[error("entries do not cover the cells of the shape: {0}")]
    ShapeMismatch(String),

    #[error("order violation at {cell}: {detail}")]
    OrderViolation { cell: Cell, detail: String },

    #[error("column {col} repeats unmarked entry {value}")]
    ColumnMultiplicity { col: usize, value: usize },

    #[error("row {row} repeats marked entry {value}'")]
    RowMultiplicity { row: usize, value: usize },

    #[error("marked letter on diagonal cell {0}")]
    DiagonalMark(Cell),

    #[error("entry value {value} exceeds alphabet bound {bound}")]
    ValueOutOfRange { value: usize, bound: usize },

    #[error("color {color} out of range 1..{bound}")]
    ColorOutOfRange { color: usize, bound: usize },

    #[error("operator output escaped the seed set: {0}")]
    ClosureViolation(String),

    #[error("graph edge references unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("no preimage in the ambient set")]
    NoPreimage,

    #[error("graphs are not comparable: {0}")]
    NotComparable(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("invalid symmetric tableau: {0}")]
    InvalidSymmetric(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
