use thiserror::Error;

use crate::polygon::Segment;

/// Errors raised by the library.
///
/// Variants that indicate a mathematical invariant breaking at runtime
/// (`NotDivisible` on a cluster variable, `NotInImageLattice` on a
/// lamination) are reported rather than panicking so callers can surface them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {label} is outside 1..={n_gon}")]
    InvalidVertex { label: usize, n_gon: usize },
    #[error("a segment needs two distinct vertices, got {0} twice")]
    DegenerateSegment(usize),
    #[error("a polygon needs at least 3 vertices, got {0}")]
    InvalidPolygon(usize),
    #[error("segment {0} is an edge, expected a diagonal")]
    NotADiagonal(Segment),
    #[error("segments {0} and {1} cross")]
    Crossing(Segment, Segment),
    #[error("triangulation has {found} diagonals, a complete one needs {expected}")]
    IncompleteTriangulation { found: usize, expected: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("reconstructed weight of {0} is not integral")]
    NonIntegral(Segment),
    #[error("not a lamination: {0}")]
    NotALamination(String),
    #[error("variable sets differ")]
    VariableMismatch,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial has a non-positive coefficient")]
    NotPositive,
    #[error("index {0} is frozen and cannot be mutated")]
    FrozenDirection(usize),
    #[error("index {index} out of range for a seed of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("exchange matrix rows of unfrozen indices are rank deficient")]
    RankDeficient,
    #[error("exponent vector {0:?} is not in the image lattice")]
    NotInImageLattice(Vec<i64>),
    #[error("coordinate {0} is unbounded on the region")]
    Unbounded(usize),
    #[error("empty input")]
    EmptyInput,
    #[error("spec is not a Stasheff polytope")]
    NotStasheff,
    #[error("expansion exceeded the node budget of {0}")]
    BudgetExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
