use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::hnf::{hermite_normal_form, left_kernel};
use super::snf::smith_normal_form;
use super::{IntMatrix, LinalgError};

/// Subgroup of `ℤ^ambient_rank` stored by its canonical Hermite basis.
///
/// The basis rows are independent and in canonical row HNF, so lattice
/// equality is plain `==` on the struct.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    ambient_rank: usize,
    basis: IntMatrix,
}

/// Structure of a quotient `super/sub` of lattices: invariant factors
/// (each ≥ 2, in a divisibility chain) plus the free rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientInvariants {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl QuotientInvariants {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    /// Order of the quotient group, or `None` when it is infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(
            self.invariant_factors
                .iter()
                .fold(BigInt::one(), |acc, d| acc * d),
        )
    }

    /// Exponent (largest invariant factor), or `None` when infinite.
    pub fn exponent(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(
            self.invariant_factors
                .last()
                .cloned()
                .unwrap_or_else(BigInt::one),
        )
    }
}

impl Lattice {
    /// The zero lattice in the given ambient rank (empty basis).
    pub fn zero(ambient_rank: usize) -> Self {
        Lattice {
            ambient_rank,
            basis: IntMatrix::zero(0, ambient_rank),
        }
    }

    /// All of `ℤ^ambient_rank`.
    pub fn full(ambient_rank: usize) -> Self {
        Lattice {
            ambient_rank,
            basis: IntMatrix::identity(ambient_rank),
        }
    }

    /// Canonical lattice spanned by the rows of `m` (`ambient = m.cols()`).
    pub fn from_matrix(m: &IntMatrix) -> Self {
        Lattice {
            ambient_rank: m.cols(),
            basis: hermite_normal_form(m),
        }
    }

    /// Canonical lattice spanned by integer generator vectors.
    pub fn from_generators(
        vectors: &[Vec<BigInt>],
        ambient_rank: usize,
    ) -> Result<Self, LinalgError> {
        for v in vectors {
            if v.len() != ambient_rank {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_rank,
                    got: v.len(),
                });
            }
        }
        let m = IntMatrix::from_row_vectors(vectors.to_vec(), ambient_rank)?;
        Ok(Lattice::from_matrix(&m))
    }

    /// Trusted constructor for a basis already in canonical HNF.
    pub(crate) fn from_hnf_basis(basis: IntMatrix) -> Self {
        Lattice {
            ambient_rank: basis.cols(),
            basis,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Number of basis rows (the lattice rank).
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.rows() == 0
    }

    pub fn check_ambient(&self, other: &Lattice) -> Result<(), LinalgError> {
        if self.ambient_rank != other.ambient_rank {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_rank,
                right: other.ambient_rank,
            });
        }
        Ok(())
    }

    /// Lattice `{k·v : v ∈ self}`.
    pub fn scale(&self, k: &BigInt) -> Lattice {
        if k.is_zero() {
            return Lattice::zero(self.ambient_rank);
        }
        let rows: Vec<Vec<BigInt>> = self
            .basis
            .rows_iter()
            .map(|r| r.iter().map(|e| e * k).collect())
            .collect();
        let m = IntMatrix::from_row_vectors(rows, self.ambient_rank).expect("same width");
        Lattice::from_matrix(&m)
    }

    /// Sum (join): canonical lattice spanned by both bases.
    pub fn sum(&self, other: &Lattice) -> Result<Lattice, LinalgError> {
        self.check_ambient(other)?;
        let stacked = self.basis.stack(&other.basis)?;
        Ok(Lattice::from_matrix(&stacked))
    }

    /// Intersection, computed exactly from the left kernel of the stacked
    /// basis relation matrix.
    pub fn intersect(&self, other: &Lattice) -> Result<Lattice, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Lattice::zero(self.ambient_rank));
        }
        let stacked = self.basis.stack(&other.basis)?;
        let kernel = left_kernel(&stacked);
        // A kernel row (x | y) says x·A = -y·B, i.e. x·A lies in both.
        let ra = self.basis.rows();
        let mut gens = Vec::with_capacity(kernel.rows());
        for i in 0..kernel.rows() {
            let x = &kernel.row(i)[..ra];
            gens.push(self.basis.apply_row(x)?);
        }
        Lattice::from_generators(&gens, self.ambient_rank)
    }

    /// Coordinates of `v` in the basis (back-substitution against the
    /// HNF); `None` when `v` is not in the lattice.
    pub fn coordinates_of(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
        if v.len() != self.ambient_rank {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_rank,
                got: v.len(),
            });
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.rows());
        for i in 0..self.basis.rows() {
            let row = self.basis.row(i);
            let pivot_col = row
                .iter()
                .position(|e| !e.is_zero())
                .expect("HNF basis rows are nonzero");
            let (q, r) = rest[pivot_col].div_rem(&row[pivot_col]);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for (dst, src) in rest.iter_mut().zip(row.iter()) {
                    *dst -= &q * src;
                }
            }
            coords.push(q);
        }
        if rest.iter().all(|e| e.is_zero()) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    /// Membership test: is `v` an integer combination of the basis rows?
    pub fn contains(&self, v: &[BigInt]) -> Result<bool, LinalgError> {
        Ok(self.coordinates_of(v)?.is_some())
    }

    pub fn contains_lattice(&self, other: &Lattice) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        for i in 0..other.basis.rows() {
            if !self.contains(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Index `[super : sub]` as the determinant ratio when both lattices
    /// have full rank; used by tests as a cross-check.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rank() != self.ambient_rank {
            return None;
        }
        let mut det = BigInt::one();
        for i in 0..self.rank() {
            let pivot = self
                .basis
                .row(i)
                .iter()
                .find(|e| !e.is_zero())
                .expect("HNF rows nonzero");
            det *= pivot;
        }
        Some(det)
    }
}

/// Structure of `super/sub` for nested lattices: invariant factors of the
/// expression of `sub`'s basis in `super`'s basis.
pub fn quotient_invariants(
    sub: &Lattice,
    sup: &Lattice,
) -> Result<QuotientInvariants, LinalgError> {
    sub.check_ambient(sup)?;
    let mut coord_rows = Vec::with_capacity(sub.rank());
    for i in 0..sub.basis().rows() {
        match sup.coordinates_of(sub.basis().row(i))? {
            Some(c) => coord_rows.push(c),
            None => return Err(LinalgError::ContainmentViolation),
        }
    }
    let x = IntMatrix::from_row_vectors(coord_rows, sup.rank())?;
    let snf = smith_normal_form(&x);
    let invariant_factors: Vec<BigInt> = snf
        .invariant_factors
        .iter()
        .filter(|d| !d.is_one())
        .cloned()
        .collect();
    Ok(QuotientInvariants {
        invariant_factors,
        free_rank: sup.rank() - snf.invariant_factors.len(),
    })
}
