//! Exact computational algebra for generalized dimension subgroups.
//!
//! `dimquot` computes, over finite groups and their integral group rings:
//!
//! * symmetric commutators `‖R₁,…,Rₙ‖` of normal subgroups and symmetric
//!   products `‖a₁,…,aₙ‖` of two-sided ideals,
//! * generalized dimension subgroups `D(G, a) = G ∩ (1 + a)` and the
//!   quotients `D(G, ‖r₁,…,rₙ‖) / ‖R₁,…,Rₙ‖`,
//! * the quadratic functor calculus on finitely generated abelian groups
//!   (Whitehead Γ, the tensor and exterior squares, and the 2-torsion
//!   functor Φ),
//! * goodness of ideal tuples, the associated cube of subquotients, and
//!   the crossed-cube axiom checker.
//!
//! Everything is exact: integer matrices use arbitrary precision, lattices
//! are kept in canonical Hermite normal form, and all verdicts are
//! equalities of canonical forms rather than numerical comparisons.
//!
//! The `dimquot` binary exposes the same machinery as a batch verifier;
//! see the book under `book/` for a guided tour.

pub mod abgroup;
pub mod cli;
pub mod exactlinalg;
pub mod group;
pub mod groupring;
pub mod verify;

// The book's code snippets double as doc-tests so the guide cannot drift
// from the API. `cargo test --doc` picks these up.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/abelian-groups.md")]
    mod abelian_groups {}
    #[doc = include_str!("../../../book/src/gamma.md")]
    mod gamma {}
    #[doc = include_str!("../../../book/src/finite-groups.md")]
    mod finite_groups {}
    #[doc = include_str!("../../../book/src/group-rings.md")]
    mod group_rings {}
    #[doc = include_str!("../../../book/src/ideal-cubes.md")]
    mod ideal_cubes {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
