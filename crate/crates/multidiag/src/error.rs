//! Crate-wide error type.

use crate::inverse::SingularWitness;
use crate::scalar::Mode;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mode mismatch: {0} vs {1}")]
    ModeMismatch(Mode, Mode),

    #[error("division by zero")]
    DivisionByZero,

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("a diagonal vector must have at least one coordinate")]
    EmptyVector,

    #[error("invalid diagonal spacing k={k} for n={n}: need 1 <= k <= n")]
    InvalidSpacing { n: usize, k: usize },

    #[error("diagonal offset {p} out of range: |p| must be at most {s}")]
    OffsetOutOfRange { p: isize, s: usize },

    #[error("diagonal at offset {p} has {len} coordinates, expected {expected}")]
    DiagonalLength {
        p: isize,
        len: usize,
        expected: usize,
    },

    #[error("diagonal at offset {p} must be zero from index {index} on")]
    TrailingZero { p: isize, index: usize },

    #[error("entry ({i}, {j}) lies off the diagonal lattice but is nonzero")]
    OffLatticeNonzero { i: usize, j: usize },

    #[error("index ({i}, {j}) out of range for a matrix of size {size}")]
    IndexOutOfRange { i: usize, j: usize, size: usize },

    #[error("shape mismatch: (n={n1}, k={k1}) vs (n={n2}, k={k2})")]
    ShapeMismatch {
        n1: usize,
        k1: usize,
        n2: usize,
        k2: usize,
    },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("matrix is singular{}", match .0 { Some(w) => format!(": {w}"), None => String::new() })]
    Singular(Option<SingularWitness>),

    #[error("closed-form path requires n+1 <= 2k, got n={n}, k={k}")]
    OutsideClosedFormRegime { n: usize, k: usize },

    #[error("operation requires exact arithmetic mode")]
    ExactModeRequired,

    #[error("matrix is not k-tridiagonal: diagonal at offset {p} is nonzero")]
    NotKTridiagonal { p: isize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}
