use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// [`BlockError::Singular`] is the mathematical failure outcome (the matrix,
/// or a leading principal minor, is singular). Every other variant is a shape,
/// usage or library-limitation error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("FAIL: singular")]
    Singular,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid dimension {rows}×{cols}: element counts must be positive")]
    InvalidDimension { rows: usize, cols: usize },
    #[error("grid has {got} entries, expected {expected}")]
    EntryCount { expected: usize, got: usize },
    #[error("ragged rows: row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, got: usize },
    #[error("shape error at block ({row},{col}): {reason}")]
    BlockShape { row: usize, col: usize, reason: String },
    #[error("mixed entries: rows must hold only scalars or only block matrices")]
    MixedEntries,
    #[error("index ({row},{col}) out of range for {rows}×{cols}")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("structure mismatch: {0}")]
    StructureMismatch(String),
    #[error("inner partitions differ: {left:?} vs {right:?}")]
    InnerPartitionMismatch { left: Vec<usize>, right: Vec<usize> },
    #[error("cannot conform {kind} block: {reason}")]
    Conformability { kind: &'static str, reason: String },
    #[error("matrix is not square ({rows}×{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("unsupported shape: {0}")]
    Unsupported(String),
    #[error("{0}")]
    BadShape(&'static str),
    #[error("malformed block matrix at {path}: {reason}")]
    Malformed { path: String, reason: String },
    #[error("invalid scalar literal {0:?}")]
    ScalarSyntax(String),
}

impl BlockError {
    pub fn is_singular(&self) -> bool {
        matches!(self, BlockError::Singular)
    }
}

pub type Result<T, E = BlockError> = std::result::Result<T, E>;
