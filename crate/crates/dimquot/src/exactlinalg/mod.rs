//! Exact integer linear algebra: arbitrary-precision matrices, Hermite and
//! Smith normal forms, and lattice arithmetic (sum, intersection,
//! membership, quotient structure).
//!
//! Everything downstream — ideals of group rings, abelian-group
//! presentations, quotient invariants — reduces to the operations in this
//! module. All values are immutable and all operations are pure.

mod hnf;
mod lattice;
mod matrix;
pub(crate) mod modrow;
mod snf;

pub use hnf::{hermite_normal_form, hnf_with_transform, left_kernel};
pub use lattice::{quotient_invariants, Lattice, QuotientInvariants};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithNormalForm};
pub(crate) use snf::snf_with_right_transform;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("vector length {got} does not match expected dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient ranks differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("claimed sublattice is not contained in the superlattice")]
    ContainmentViolation,
}
