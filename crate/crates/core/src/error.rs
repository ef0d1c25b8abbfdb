use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label {0}")]
    UnknownLabel(usize),

    #[error("duplicate label {0}")]
    DuplicateLabel(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("undefined: quasideterminant |A|_{{{row},{col}}} at depth {depth}")]
    Undefined { row: usize, col: usize, depth: usize },

    #[error("division by zero")]
    ZeroDivision,

    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(&'static str),

    #[error("invalid indices: {0}")]
    InvalidIndices(&'static str),

    #[error("operation requires a commutative scalar kind")]
    NotCommutative,
}
