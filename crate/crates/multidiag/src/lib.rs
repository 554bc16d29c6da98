//! Structured linear algebra for square matrices whose nonzero
//! diagonals sit at equally spaced offsets `0, ±k, ±2k, ..., ±sk`
//! (`s = ⌊n/k⌋` for an `(n+1) × (n+1)` matrix).
//!
//! Matrices are stored as their diagonals only ([`MdMatrix`]), and the
//! class is closed under the operations provided here: structured
//! multiplication and powers ([`algebra`]), determinants and inverses
//! along several routes ([`inverse`]), all either in exact
//! arbitrary-precision rational arithmetic (with Gaussian-rational
//! complex support) or in complex floating point ([`Scalar`]).
//! Brute-force dense references live in [`oracle`] for cross-checking,
//! and [`io`] defines the canonical JSON file format used by the
//! `multidiag` binary.

pub mod algebra;
pub mod cli;
pub mod diagvec;
pub mod error;
pub mod inverse;
pub mod io;
pub mod mdmatrix;
pub mod oracle;
pub mod scalar;

pub use diagvec::DiagVec;
pub use error::{Error, Result};
pub use inverse::{CharPoly, KTridiagonal, SingularWitness};
pub use mdmatrix::{DenseMatrix, MdMatrix};
pub use scalar::{Mode, Scalar};
