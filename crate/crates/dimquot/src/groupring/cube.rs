//! Goodness of ideal tuples and the cube of subquotients attached to a
//! tuple.
//!
//! For an n-tuple `(R; I₁,…,Iₙ)` write `I(β) = ∩_{i∈β} Iᵢ` (with `I(∅)`
//! the whole ring and empty sums zero). The tuple is *good* when
//!
//! ```text
//! I(β∪{k}) ∩ Σ_{i∈α} I(β∪{i}) = Σ_{i∈α} I(β∪{k,i})
//! ```
//!
//! for all disjoint `α, β` and `k` outside both. The attached cube
//! assigns to each disjoint pair `(α, β)` the subquotient
//! `I(β) / Σ_{i∈α} I(β∪{i})`.

use std::collections::BTreeMap;

use crate::exactlinalg::{quotient_invariants, Lattice, QuotientInvariants};

use super::{IdealTuple, RingError};

/// Outcome of the goodness test; on failure the first violating
/// `(α, β, k)` instance (as 1-based index lists) is reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessReport {
    pub good: bool,
    pub witness: Option<GoodnessWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessWitness {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub k: usize,
}

fn mask_to_indices(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

/// Sum `Σ_{i∈α} I(β∪{i})` (the zero lattice for empty α).
fn sum_over(
    tuple: &IdealTuple,
    alpha: u32,
    beta: u32,
) -> Result<Lattice, RingError> {
    let n = tuple.len();
    let mut acc = Lattice::zero(tuple.ambient().rank());
    for i in 0..n {
        if alpha & (1 << i) != 0 {
            acc = acc.sum(&tuple.intersection_over(beta | (1 << i))?)?;
        }
    }
    Ok(acc)
}

/// Checks the goodness condition for every disjoint `(α, β)` and
/// `k ∉ α∪β`, in deterministic order (β ascending, α ascending, k
/// ascending), reporting the first violation.
pub fn is_good_tuple(tuple: &IdealTuple) -> Result<GoodnessReport, RingError> {
    let n = tuple.len();
    if n > 5 {
        return Err(RingError::ArityOutOfRange { n, min: 1, max: 5 });
    }
    let full = (1u32 << n) - 1;
    for beta in 0..=full {
        for alpha in 0..=full {
            if alpha & beta != 0 {
                continue;
            }
            for k in 0..n {
                let kbit = 1u32 << k;
                if (alpha | beta) & kbit != 0 {
                    continue;
                }
                let lhs = tuple
                    .intersection_over(beta | kbit)?
                    .intersect(&sum_over(tuple, alpha, beta)?)?;
                let rhs = sum_over(tuple, alpha, beta | kbit)?;
                if lhs != rhs {
                    return Ok(GoodnessReport {
                        good: false,
                        witness: Some(GoodnessWitness {
                            alpha: mask_to_indices(alpha, n),
                            beta: mask_to_indices(beta, n),
                            k: k + 1,
                        }),
                    });
                }
            }
        }
    }
    Ok(GoodnessReport {
        good: true,
        witness: None,
    })
}

/// The cube of subquotients: entry `(α, β)` (disjoint masks) holds the
/// invariant factors of `I(β) / Σ_{i∈α} I(β∪{i})`.
#[derive(Clone, Debug)]
pub struct EIdlCube {
    pub n: usize,
    pub entries: BTreeMap<(u32, u32), QuotientInvariants>,
}

impl EIdlCube {
    pub fn entry(&self, alpha: u32, beta: u32) -> Option<&QuotientInvariants> {
        self.entries.get(&(alpha, beta))
    }

    /// The 3×3 layout of the n = 2 cube, rows top to bottom:
    ///
    /// ```text
    /// (∅,{1,2})  (∅,{2})  ({1},{2})
    /// (∅,{1})    (∅,∅)    ({1},∅)
    /// ({2},{1})  ({2},∅)  ({1,2},∅)
    /// ```
    pub fn square_layout(&self) -> Option<[[&QuotientInvariants; 3]; 3]> {
        if self.n != 2 {
            return None;
        }
        let get = |a: u32, b: u32| self.entries.get(&(a, b));
        Some([
            [get(0b00, 0b11)?, get(0b00, 0b10)?, get(0b01, 0b10)?],
            [get(0b00, 0b01)?, get(0b00, 0b00)?, get(0b01, 0b00)?],
            [get(0b10, 0b01)?, get(0b10, 0b00)?, get(0b11, 0b00)?],
        ])
    }
}

/// Computes every entry of the cube (n ≤ 4).
pub fn e_idl_cube(tuple: &IdealTuple) -> Result<EIdlCube, RingError> {
    let n = tuple.len();
    if n > 4 {
        return Err(RingError::ArityOutOfRange { n, min: 1, max: 4 });
    }
    let full = (1u32 << n) - 1;
    let mut entries = BTreeMap::new();
    for beta in 0..=full {
        let numerator = tuple.intersection_over(beta)?;
        for alpha in 0..=full {
            if alpha & beta != 0 {
                continue;
            }
            let denominator = sum_over(tuple, alpha, beta)?;
            let q = quotient_invariants(&denominator, &numerator)?;
            entries.insert((alpha, beta), q);
        }
    }
    Ok(EIdlCube { n, entries })
}

#[cfg(test)]
mod tests {
    use super::super::{zero_multiplication_ring, Ideal, IdealTuple};
    use super::*;
    use crate::exactlinalg::Lattice;
    use crate::group::FiniteGroup;
    use num_bigint::BigInt;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn integers() -> std::sync::Arc<super::super::AmbientRing> {
        let e = FiniteGroup::from_table(&[vec![0]]).unwrap();
        super::super::group_ring(&e).unwrap()
    }

    fn n_z(ring: &std::sync::Arc<super::super::AmbientRing>, n: i64) -> Ideal {
        Ideal::from_lattice(
            ring.clone(),
            Lattice::from_generators(&[big(&[n])], 1).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn two_tuples_are_always_good() {
        let ring = integers();
        let t = IdealTuple::new(vec![n_z(&ring, 4), n_z(&ring, 6)]).unwrap();
        assert!(is_good_tuple(&t).unwrap().good);
    }

    #[test]
    fn principal_ideal_triples_are_good() {
        let ring = integers();
        let t = IdealTuple::new(vec![n_z(&ring, 2), n_z(&ring, 3), n_z(&ring, 4)]).unwrap();
        assert!(is_good_tuple(&t).unwrap().good);
    }

    #[test]
    fn zero_multiplication_counterexample_is_rejected() {
        // I = ⟨(1,0)⟩, J = ⟨(0,1)⟩, K = ⟨(1,1)⟩ in the rank-2 zero ring:
        // I ∩ (J + K) = I but I∩J + I∩K = 0.
        let ring = zero_multiplication_ring(2);
        let i = Ideal::from_lattice(
            ring.clone(),
            Lattice::from_generators(&[big(&[1, 0])], 2).unwrap(),
        )
        .unwrap();
        let j = Ideal::from_lattice(
            ring.clone(),
            Lattice::from_generators(&[big(&[0, 1])], 2).unwrap(),
        )
        .unwrap();
        let k = Ideal::from_lattice(
            ring.clone(),
            Lattice::from_generators(&[big(&[1, 1])], 2).unwrap(),
        )
        .unwrap();
        let t = IdealTuple::new(vec![i, j, k]).unwrap();
        let report = is_good_tuple(&t).unwrap();
        assert!(!report.good);
        let w = report.witness.unwrap();
        // Some instance with |α| = 2 and k the remaining index must fail.
        assert_eq!(w.alpha.len(), 2);
        assert!(w.beta.is_empty());
    }

    #[test]
    fn cube_of_coprime_scalars() {
        let ring = integers();
        let t = IdealTuple::new(vec![n_z(&ring, 2), n_z(&ring, 3)]).unwrap();
        let cube = e_idl_cube(&t).unwrap();
        // entry (∅, {1,2}) = 6ℤ as a group: free of rank 1.
        let e = cube.entry(0b00, 0b11).unwrap();
        assert_eq!(e.free_rank, 1);
        assert!(e.invariant_factors.is_empty());
        // entry ({1,2}, ∅) = ℤ/(2ℤ+3ℤ) = 0.
        let e = cube.entry(0b11, 0b00).unwrap();
        assert!(e.is_trivial());
        // entry (∅, ∅) = the full ambient lattice.
        let e = cube.entry(0b00, 0b00).unwrap();
        assert_eq!(e.free_rank, 1);
        // entry ({1}, ∅) = ℤ/2ℤ.
        let e = cube.entry(0b01, 0b00).unwrap();
        assert_eq!(e.invariant_factors, vec![BigInt::from(2)]);
        // 3×3 layout exists for n = 2.
        assert!(cube.square_layout().is_some());
    }

    #[test]
    fn cube_with_zero_ideals() {
        let ring = integers();
        let z = Ideal::zero(ring.clone());
        let t = IdealTuple::new(vec![z.clone(), z]).unwrap();
        let cube = e_idl_cube(&t).unwrap();
        // entry (∅, β) = 0 for β ≠ ∅.
        assert!(cube.entry(0b00, 0b01).unwrap().is_trivial());
        assert!(cube.entry(0b00, 0b11).unwrap().is_trivial());
        // entry (α, ∅): the ambient ring unchanged by zero sums.
        assert_eq!(cube.entry(0b01, 0b00).unwrap().free_rank, 1);
        assert_eq!(cube.entry(0b00, 0b00).unwrap().free_rank, 1);
    }

    #[test]
    fn good_tuple_rows_are_exact_at_order_level() {
        // For a good tuple, |entry(α,β)| = |entry(α,β∪{k})|·|entry(α∪{k},β)|
        // whenever all three are finite.
        let ring = integers();
        let t = IdealTuple::new(vec![n_z(&ring, 2), n_z(&ring, 3), n_z(&ring, 4)]).unwrap();
        assert!(is_good_tuple(&t).unwrap().good);
        let n = t.len();
        let full = (1u32 << n) - 1;
        for beta in 0..=full {
            for alpha in 0..=full {
                if alpha & beta != 0 {
                    continue;
                }
                for k in 0..n {
                    let kbit = 1 << k;
                    if (alpha | beta) & kbit != 0 {
                        continue;
                    }
                    let total = entry_order(&t, alpha, beta);
                    let fiber = entry_order(&t, alpha, beta | kbit);
                    let base = entry_order(&t, alpha | kbit, beta);
                    if let (Some(t_), Some(f), Some(b)) = (total, fiber, base) {
                        assert_eq!(t_, f * b, "α={alpha:b} β={beta:b} k={k}");
                    }
                }
            }
        }
    }

    fn entry_order(t: &IdealTuple, alpha: u32, beta: u32) -> Option<BigInt> {
        let numerator = t.intersection_over(beta).unwrap();
        let denominator = sum_over(t, alpha, beta).unwrap();
        quotient_invariants(&denominator, &numerator).unwrap().order()
    }
}
