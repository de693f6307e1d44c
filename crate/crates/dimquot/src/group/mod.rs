//! Finite groups with full multiplication tables and the normal-subgroup
//! calculus: closures, products, intersections, commutators, the
//! symmetric commutator `‖R₁,…,Rₙ‖`, quotient structure, and the
//! connectivity predicate for tuples of normal subgroups.

mod finite;
mod perm;
mod subgroup;
mod word;

pub use finite::{FiniteGroup, DEFAULT_ORDER_CAP};
pub use perm::Permutation;
pub use subgroup::{
    commutator_subgroup, generated_subgroup, is_connected_tuple, normal_closure,
    quotient_structure, subgroup_product, symmetric_commutator, QuotientStructure, Subgroup,
};
pub use word::Word;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("duplicate generator name")]
    DuplicateGeneratorName,
    #[error("group closure exceeds the configured order cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("unknown generator name `{0}`")]
    UnknownGenerator(String),
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
    #[error("set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("set product is not a subgroup (no normal factor)")]
    ProductNotSubgroup,
    #[error("operation requires normal subgroups")]
    NotNormal,
    #[error("tuple length {n} outside supported range {min}..={max}")]
    ArityOutOfRange { n: usize, min: usize, max: usize },
    #[error("claimed subgroup containment does not hold")]
    ContainmentViolation,
}
