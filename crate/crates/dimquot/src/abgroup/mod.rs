//! Finitely generated abelian groups in invariant-factor form, their
//! homomorphisms, pushout/pullback detection for commuting squares, and
//! the quadratic functor calculus (Whitehead Γ, tensor square, exterior
//! square Λ², and the 2-torsion kernel functor Φ).

mod gamma;
mod presented;
mod squares;

pub use gamma::{
    exterior_square, phi, whitehead_gamma, whitehead_gamma_all_triples, whitehead_map,
    GammaMethod,
};
pub use squares::{is_pullback, is_pushout, AbSquare, SquareReport};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactlinalg::{IntMatrix, LinalgError};
use presented::{CanonicalQuotient, Presented};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AbGroupError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invariant factors must each be ≥ 2 and form a divisibility chain")]
    InvalidInvariantFactors,
    #[error("operation requires a finite group (free rank 0)")]
    InfiniteGroup,
    #[error("presentation-based construction is infeasible at order {order}")]
    PresentationTooLarge { order: String },
    #[error("matrix does not define a homomorphism (target relations violated)")]
    InvalidHom,
    #[error("square does not commute")]
    NonCommutingSquare,
}

/// Finitely generated abelian group `ℤ^free_rank ⊕ ⊕ᵢ ℤ/dᵢ` with
/// `2 ≤ d₁ | d₂ | …`. Canonical coordinates are the torsion generators in
/// chain order followed by the free generators, so equality of values is
/// isomorphism of groups.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FgAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

/// Exponent of a group: least `m` with `m·x = 0` for all `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Exponent {
    Finite(BigInt),
    Infinite,
}

impl Exponent {
    pub fn divides(&self, m: u64) -> bool {
        match self {
            Exponent::Finite(e) => BigInt::from(m).mod_floor(e).is_zero(),
            Exponent::Infinite => false,
        }
    }
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exponent::Finite(e) => write!(f, "{e}"),
            Exponent::Infinite => write!(f, "infinite"),
        }
    }
}

impl FgAbelianGroup {
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Result<Self, AbGroupError> {
        let two = BigInt::from(2);
        for (i, d) in invariant_factors.iter().enumerate() {
            if d < &two {
                return Err(AbGroupError::InvalidInvariantFactors);
            }
            if i > 0 && !d.mod_floor(&invariant_factors[i - 1]).is_zero() {
                return Err(AbGroupError::InvalidInvariantFactors);
            }
        }
        Ok(FgAbelianGroup {
            free_rank,
            invariant_factors,
        })
    }

    pub fn trivial() -> Self {
        FgAbelianGroup {
            free_rank: 0,
            invariant_factors: vec![],
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            invariant_factors: vec![],
        }
    }

    /// `ℤ/n` for `n ≥ 1` (`n = 1` is the trivial group).
    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            FgAbelianGroup {
                free_rank: 0,
                invariant_factors: vec![BigInt::from(n)],
            }
        }
    }

    /// Normalizes an arbitrary multiset of cyclic orders (1s allowed and
    /// dropped) plus a free rank into invariant-factor form.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[BigInt]) -> Self {
        let mut os: Vec<BigInt> = orders
            .iter()
            .filter(|o| !o.is_one())
            .map(|o| o.abs())
            .collect();
        assert!(os.iter().all(|o| !o.is_zero()), "cyclic order must be ≥ 1");
        // Repeated (gcd, lcm) exchanges converge to the divisor chain and
        // preserve the isomorphism class of the direct sum.
        loop {
            let mut changed = false;
            os.sort();
            for i in 0..os.len() {
                for j in (i + 1)..os.len() {
                    if !os[j].mod_floor(&os[i]).is_zero() {
                        let g = os[i].gcd(&os[j]);
                        let l = &os[i] / &g * &os[j];
                        os[i] = g;
                        os[j] = l;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        os.retain(|o| !o.is_one());
        FgAbelianGroup {
            free_rank,
            invariant_factors: os,
        }
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut orders = self.invariant_factors.clone();
        orders.extend_from_slice(&other.invariant_factors);
        FgAbelianGroup::from_cyclic_orders(self.free_rank + other.free_rank, &orders)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(
            self.invariant_factors
                .iter()
                .fold(BigInt::one(), |acc, d| acc * d),
        )
    }

    /// Number of canonical coordinates (torsion then free).
    pub fn coord_count(&self) -> usize {
        self.invariant_factors.len() + self.free_rank
    }

    /// Reduces a coordinate vector into canonical range (`[0, dᵢ)` on the
    /// torsion coordinates, untouched on the free ones).
    pub fn normalize_coords(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut out = coords.to_vec();
        for (i, d) in self.invariant_factors.iter().enumerate() {
            out[i] = out[i].mod_floor(d);
        }
        out
    }

    /// All element coordinate vectors of a finite group, in mixed-radix
    /// order (first torsion coordinate varies fastest).
    pub fn elements(&self) -> Result<Vec<Vec<BigInt>>, AbGroupError> {
        if !self.is_finite() {
            return Err(AbGroupError::InfiniteGroup);
        }
        let mut radices = Vec::with_capacity(self.invariant_factors.len());
        for d in &self.invariant_factors {
            let d = u64::try_from(d).map_err(|_| AbGroupError::PresentationTooLarge {
                order: self.order().map(|o| o.to_string()).unwrap_or_default(),
            })?;
            radices.push(d);
        }
        let order: u64 = radices.iter().product();
        let mut elems = Vec::with_capacity(order as usize);
        for idx in 0..order {
            let mut rest = idx;
            let mut coords = Vec::with_capacity(radices.len());
            for &d in &radices {
                coords.push(BigInt::from(rest % d));
                rest /= d;
            }
            elems.push(coords);
        }
        Ok(elems)
    }

    pub(crate) fn presented(&self) -> Presented {
        Presented::from_group(self)
    }
}

/// Largest invariant factor, 1 for the trivial group, infinite when the
/// free rank is positive.
pub fn exponent(a: &FgAbelianGroup) -> Exponent {
    if a.free_rank > 0 {
        Exponent::Infinite
    } else {
        Exponent::Finite(
            a.invariant_factors
                .last()
                .cloned()
                .unwrap_or_else(BigInt::one),
        )
    }
}

/// Tensor product over ℤ by bilinearity on the decomposition:
/// `ℤ⊗ℤ = ℤ`, `ℤ⊗ℤ/n = ℤ/n`, `ℤ/m⊗ℤ/n = ℤ/gcd(m, n)`.
pub fn tensor(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let mut orders = Vec::new();
    for da in &a.invariant_factors {
        for _ in 0..b.free_rank {
            orders.push(da.clone());
        }
        for db in &b.invariant_factors {
            orders.push(da.gcd(db));
        }
    }
    for db in &b.invariant_factors {
        for _ in 0..a.free_rank {
            orders.push(db.clone());
        }
    }
    FgAbelianGroup::from_cyclic_orders(a.free_rank * b.free_rank, &orders)
}

/// Cokernel of the relation matrix: the group `ℤ^generators / rowspan`,
/// together with the projection from the free group on the generators.
pub fn ab_from_presentation(
    generator_count: usize,
    relations: &[Vec<BigInt>],
) -> Result<(FgAbelianGroup, AbHom), AbGroupError> {
    for r in relations {
        if r.len() != generator_count {
            return Err(AbGroupError::Linalg(LinalgError::DimensionMismatch {
                expected: generator_count,
                got: r.len(),
            }));
        }
    }
    let p = Presented::from_relation_rows(generator_count, relations)?;
    let cq = CanonicalQuotient::new(&p);
    let group = cq.group().clone();
    let mut rows = Vec::with_capacity(generator_count);
    for i in 0..generator_count {
        let mut e = vec![BigInt::zero(); generator_count];
        e[i] = BigInt::one();
        rows.push(cq.project(&e));
    }
    let matrix = IntMatrix::from_row_vectors(rows, group.coord_count())?;
    let hom = AbHom::new(FgAbelianGroup::free(generator_count), group.clone(), matrix)?;
    Ok((group, hom))
}

/// Homomorphism between f.g. abelian groups: row `i` of `matrix` is the
/// image of the `i`-th canonical source generator in target coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbHom {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    matrix: IntMatrix,
}

impl AbHom {
    pub fn new(
        source: FgAbelianGroup,
        target: FgAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<Self, AbGroupError> {
        if matrix.rows() != source.coord_count() || matrix.cols() != target.coord_count() {
            return Err(AbGroupError::Linalg(LinalgError::DimensionMismatch {
                expected: source.coord_count(),
                got: matrix.rows(),
            }));
        }
        // Well-definedness: each torsion generator of order d must map to
        // an element killed by d.
        for (i, d) in source.invariant_factors.iter().enumerate() {
            for j in 0..target.coord_count() {
                let v = d * &matrix[(i, j)];
                let ok = match target.invariant_factors.get(j) {
                    Some(dj) => v.mod_floor(dj).is_zero(),
                    None => v.is_zero(),
                };
                if !ok {
                    return Err(AbGroupError::InvalidHom);
                }
            }
        }
        // Store normalized representatives.
        let mut rows = Vec::with_capacity(matrix.rows());
        for i in 0..matrix.rows() {
            rows.push(target.normalize_coords(matrix.row(i)));
        }
        let matrix = IntMatrix::from_row_vectors(rows, target.coord_count())?;
        Ok(AbHom {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: FgAbelianGroup, target: FgAbelianGroup) -> Self {
        let matrix = IntMatrix::zero(source.coord_count(), target.coord_count());
        AbHom {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(a: &FgAbelianGroup) -> Self {
        AbHom {
            source: a.clone(),
            target: a.clone(),
            matrix: IntMatrix::identity(a.coord_count()),
        }
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Image of an element given by source coordinates.
    pub fn apply(&self, coords: &[BigInt]) -> Result<Vec<BigInt>, AbGroupError> {
        let raw = self.matrix.apply_row(coords)?;
        Ok(self.target.normalize_coords(&raw))
    }

    pub fn is_zero_map(&self) -> bool {
        self.matrix.is_zero()
    }
}
