//! Finite-rank ambient rings (chiefly integral group rings ℤ[G]) with
//! two-sided ideals stored as canonical integer lattices; augmentation
//! ideals, ideal arithmetic, symmetric ideal products, dimension
//! subgroups, goodness of ideal tuples and the crossed-cube machinery.

mod crossed;
mod cube;

pub use crossed::{
    crossed_cube_check, induced_crossed_cube, AxiomVerdict, CrossedCubeData, CrossedCubeOptions,
    FiniteRing,
};
pub use cube::{e_idl_cube, is_good_tuple, EIdlCube, GoodnessReport};

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlinalg::{Lattice, LinalgError};
use crate::group::{FiniteGroup, GroupError, Subgroup};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("ideals belong to different ambient rings")]
    AmbientMismatch,
    #[error("ambient ring is not the group ring of the given group")]
    AmbientNotGroupRing,
    #[error("lattice is not closed under ambient multiplication")]
    NotAnIdeal,
    #[error("defensive closure pass found growth; product basis was not two-sided")]
    ClosureViolated,
    #[error("tuple length {n} outside supported range {min}..={max}")]
    ArityOutOfRange { n: usize, min: usize, max: usize },
    #[error("ring rank {rank} exceeds the configured cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("ill-formed crossed cube data: {0}")]
    IllFormedCube(String),
    #[error("pairing domain of size {domain} exceeds the cap {cap}")]
    PairingDomainExceeded { domain: usize, cap: usize },
    #[error("induced ring order would exceed the cap {cap}")]
    InducedRingTooLarge { cap: usize },
}

/// How the ambient multiplication is defined.
#[derive(Clone, Debug, PartialEq, Eq)]
enum RingKind {
    /// Basis indexed by group elements, products from the group table.
    GroupRing(Arc<FiniteGroup>),
    /// All basis products are zero.
    ZeroMultiplication,
}

/// Free ℤ-module of finite rank with a bilinear, associative
/// multiplication given on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientRing {
    rank: usize,
    kind: RingKind,
}

pub const DEFAULT_RANK_CAP: usize = 128;

/// The integral group ring ℤ[G].
pub fn group_ring(g: &Arc<FiniteGroup>) -> Result<Arc<AmbientRing>, RingError> {
    group_ring_capped(g, DEFAULT_RANK_CAP)
}

pub fn group_ring_capped(g: &Arc<FiniteGroup>, cap: usize) -> Result<Arc<AmbientRing>, RingError> {
    if g.order() > cap {
        return Err(RingError::RankCapExceeded {
            rank: g.order(),
            cap,
        });
    }
    let ring = AmbientRing {
        rank: g.order(),
        kind: RingKind::GroupRing(g.clone()),
    };
    debug_assert!(ring.basis_products_associative());
    Ok(Arc::new(ring))
}

/// Rank-n ring in which every product vanishes.
pub fn zero_multiplication_ring(rank: usize) -> Arc<AmbientRing> {
    Arc::new(AmbientRing {
        rank,
        kind: RingKind::ZeroMultiplication,
    })
}

impl AmbientRing {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> Option<&Arc<FiniteGroup>> {
        match &self.kind {
            RingKind::GroupRing(g) => Some(g),
            RingKind::ZeroMultiplication => None,
        }
    }

    pub fn is_group_ring_of(&self, g: &Arc<FiniteGroup>) -> bool {
        match &self.kind {
            RingKind::GroupRing(h) => Arc::ptr_eq(h, g) || **h == **g,
            RingKind::ZeroMultiplication => false,
        }
    }

    /// Product of basis elements as `Some(index)` for group rings (the
    /// basis permutes) or `None` for the zero multiplication.
    fn basis_product(&self, i: usize, j: usize) -> Option<usize> {
        match &self.kind {
            RingKind::GroupRing(g) => Some(g.mul(i, j)),
            RingKind::ZeroMultiplication => None,
        }
    }

    fn basis_products_associative(&self) -> bool {
        // Sampled above rank 64; exhaustive below.
        let n = self.rank;
        let step = if n <= 64 { 1 } else { n / 32 + 1 };
        for i in (0..n).step_by(step) {
            for j in (0..n).step_by(step) {
                for k in (0..n).step_by(step) {
                    let ij_k = self.basis_product(i, j).and_then(|x| self.basis_product(x, k));
                    let i_jk = self.basis_product(j, k).and_then(|x| self.basis_product(i, x));
                    if ij_k != i_jk {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Bilinear product of coefficient vectors.
    pub fn mul_vectors(&self, u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rank];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if let Some(k) = self.basis_product(i, j) {
                    out[k] += a * b;
                }
            }
        }
        out
    }
}

/// Two-sided ideal of an ambient ring, stored as its coefficient lattice
/// in canonical Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ambient: Arc<AmbientRing>,
    lattice: Lattice,
}

impl Ideal {
    /// Wraps a lattice after verifying two-sided closure under every
    /// ambient basis element.
    pub fn from_lattice(ambient: Arc<AmbientRing>, lattice: Lattice) -> Result<Self, RingError> {
        if lattice.ambient_rank() != ambient.rank() {
            return Err(RingError::Linalg(LinalgError::AmbientMismatch {
                left: lattice.ambient_rank(),
                right: ambient.rank(),
            }));
        }
        let ideal = Ideal { ambient, lattice };
        if !ideal.is_two_sided_closed()? {
            return Err(RingError::NotAnIdeal);
        }
        Ok(ideal)
    }

    pub fn zero(ambient: Arc<AmbientRing>) -> Self {
        let rank = ambient.rank();
        Ideal {
            ambient,
            lattice: Lattice::zero(rank),
        }
    }

    /// The whole ring as an ideal (two-sided by definition).
    pub fn full(ambient: Arc<AmbientRing>) -> Self {
        let rank = ambient.rank();
        Ideal {
            ambient,
            lattice: Lattice::full(rank),
        }
    }

    pub fn ambient(&self) -> &Arc<AmbientRing> {
        &self.ambient
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.lattice.is_zero()
    }

    fn check_same_ambient(&self, other: &Ideal) -> Result<(), RingError> {
        if !(Arc::ptr_eq(&self.ambient, &other.ambient) || *self.ambient == *other.ambient) {
            return Err(RingError::AmbientMismatch);
        }
        Ok(())
    }

    /// Each basis row times each ambient basis element stays inside, on
    /// both sides.
    pub fn is_two_sided_closed(&self) -> Result<bool, RingError> {
        let n = self.ambient.rank();
        let mut unit = vec![BigInt::zero(); n];
        for i in 0..self.lattice.rank() {
            let row = self.lattice.basis().row(i);
            for b in 0..n {
                unit[b] = BigInt::one();
                let left = self.ambient.mul_vectors(&unit, row);
                let right = self.ambient.mul_vectors(row, &unit);
                unit[b] = BigInt::zero();
                if !self.lattice.contains(&left)? || !self.lattice.contains(&right)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Lattice sum of ideals (again an ideal; re-verified).
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal, RingError> {
    a.check_same_ambient(b)?;
    let lattice = a.lattice.sum(&b.lattice)?;
    let out = Ideal {
        ambient: a.ambient.clone(),
        lattice,
    };
    if !out.is_two_sided_closed()? {
        return Err(RingError::ClosureViolated);
    }
    Ok(out)
}

/// Lattice intersection of ideals (again an ideal; re-verified).
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal, RingError> {
    a.check_same_ambient(b)?;
    let lattice = a.lattice.intersect(&b.lattice)?;
    let out = Ideal {
        ambient: a.ambient.clone(),
        lattice,
    };
    if !out.is_two_sided_closed()? {
        return Err(RingError::ClosureViolated);
    }
    Ok(out)
}

/// Product ideal: the span of all pairwise products of basis rows. This
/// generates the full product because both factors are ℤ-spans of their
/// bases and already two-sided; the closure pass is still run and any
/// growth is a hard error.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal, RingError> {
    a.check_same_ambient(b)?;
    let n = a.ambient.rank();
    let mut gens = Vec::with_capacity(a.rank() * b.rank());
    for i in 0..a.rank() {
        for j in 0..b.rank() {
            gens.push(
                a.ambient
                    .mul_vectors(a.lattice.basis().row(i), b.lattice.basis().row(j)),
            );
        }
    }
    let lattice = Lattice::from_generators(&gens, n)?;
    let out = Ideal {
        ambient: a.ambient.clone(),
        lattice,
    };
    if !out.is_two_sided_closed()? {
        return Err(RingError::ClosureViolated);
    }
    Ok(out)
}

/// The augmentation ideal `(R−1)ℤ[G]`: the two-sided ideal generated by
/// `{x − 1 : x ∈ R}`, built from all elements of `R`.
pub fn augmentation_ideal(ring: &Arc<AmbientRing>, r: &Subgroup) -> Result<Ideal, RingError> {
    if !ring.is_group_ring_of(r.parent()) {
        return Err(RingError::AmbientNotGroupRing);
    }
    if !r.is_normal() {
        return Err(RingError::Group(GroupError::NotNormal));
    }
    let g = r.parent();
    let n = g.order();
    let mut gens = Vec::with_capacity(r.order() * n);
    for &x in r.members() {
        if x == g.identity() {
            continue;
        }
        for e in 0..n {
            // (x − 1)·g has coefficient +1 at xg and −1 at g.
            let mut v = vec![BigInt::zero(); n];
            v[g.mul(x, e)] += BigInt::one();
            v[e] -= BigInt::one();
            gens.push(v);
        }
    }
    let lattice = Lattice::from_generators(&gens, n)?;
    Ideal::from_lattice(ring.clone(), lattice)
}

/// `rs + sr`.
pub fn bd_ideal(r: &Ideal, s: &Ideal) -> Result<Ideal, RingError> {
    ideal_sum(&ideal_product(r, s)?, &ideal_product(s, r)?)
}

/// `rs + sr + (r∩s)t + t(r∩s)`.
pub fn modg_ideal(r: &Ideal, s: &Ideal, t: &Ideal) -> Result<Ideal, RingError> {
    let rs = bd_ideal(r, s)?;
    let meet = ideal_intersect(r, s)?;
    let tail = ideal_sum(&ideal_product(&meet, t)?, &ideal_product(t, &meet)?)?;
    ideal_sum(&rs, &tail)
}

/// The symmetric ideal product `‖a₁,…,aₙ‖`: over every unordered
/// partition of `{1..n}` into nonempty parts `(I, J)`, both product
/// orders `(∩_I aᵢ)(∩_J aⱼ)` and `(∩_J aⱼ)(∩_I aᵢ)` are summed.
pub fn symmetric_ideal(ideals: &[Ideal]) -> Result<Ideal, RingError> {
    let n = ideals.len();
    if !(2..=6).contains(&n) {
        return Err(RingError::ArityOutOfRange { n, min: 2, max: 6 });
    }
    for i in ideals {
        ideals[0].check_same_ambient(i)?;
    }
    let ambient = ideals[0].ambient.clone();
    let mut acc = Ideal::zero(ambient);
    for mask in 0..(1u32 << n) {
        if mask & 1 == 0 || mask == (1 << n) - 1 {
            continue;
        }
        let left = intersect_over(ideals, mask)?;
        let right = intersect_over(ideals, !mask & ((1 << n) - 1))?;
        acc = ideal_sum(&acc, &ideal_product(&left, &right)?)?;
        acc = ideal_sum(&acc, &ideal_product(&right, &left)?)?;
    }
    Ok(acc)
}

fn intersect_over(ideals: &[Ideal], mask: u32) -> Result<Ideal, RingError> {
    let mut acc: Option<Ideal> = None;
    for (i, a) in ideals.iter().enumerate() {
        if mask & (1 << i) != 0 {
            acc = Some(match acc {
                None => a.clone(),
                Some(b) => ideal_intersect(&b, a)?,
            });
        }
    }
    Ok(acc.expect("mask nonempty"))
}

/// The generalized dimension subgroup `D(G, a) = {x ∈ G : x − 1 ∈ a}`.
/// Always a normal subgroup (verified, not assumed).
pub fn dimension_subgroup(g: &Arc<FiniteGroup>, a: &Ideal) -> Result<Subgroup, RingError> {
    if !a.ambient.is_group_ring_of(g) {
        return Err(RingError::AmbientNotGroupRing);
    }
    let n = g.order();
    let mut members = BTreeSet::new();
    for x in 0..n {
        let mut v = vec![BigInt::zero(); n];
        v[x] += BigInt::one();
        v[g.identity()] -= BigInt::one();
        if a.lattice.contains(&v)? {
            members.insert(x);
        }
    }
    let sub = Subgroup::from_members(g.clone(), members)
        .expect("membership set of a two-sided ideal is a subgroup");
    assert!(
        sub.is_normal(),
        "dimension subgroup of a two-sided ideal must be normal"
    );
    Ok(sub)
}

/// An n-tuple of ideals of a shared ambient ring.
#[derive(Clone, Debug)]
pub struct IdealTuple {
    ambient: Arc<AmbientRing>,
    ideals: Vec<Ideal>,
}

impl IdealTuple {
    pub fn new(ideals: Vec<Ideal>) -> Result<Self, RingError> {
        let ambient = ideals
            .first()
            .map(|i| i.ambient.clone())
            .ok_or(RingError::ArityOutOfRange {
                n: 0,
                min: 1,
                max: 6,
            })?;
        for i in &ideals {
            ideals[0].check_same_ambient(i)?;
        }
        Ok(IdealTuple { ambient, ideals })
    }

    pub fn ambient(&self) -> &Arc<AmbientRing> {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    /// `I(β) = ∩_{i∈β} Iᵢ`, with `I(∅)` the full ambient lattice.
    pub fn intersection_over(&self, beta: u32) -> Result<Lattice, RingError> {
        let mut acc: Option<Lattice> = None;
        for (i, ideal) in self.ideals.iter().enumerate() {
            if beta & (1 << i) != 0 {
                acc = Some(match acc {
                    None => ideal.lattice.clone(),
                    Some(l) => l.intersect(&ideal.lattice)?,
                });
            }
        }
        Ok(acc.unwrap_or_else(|| Lattice::full(self.ambient.rank())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{normal_closure, Permutation};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn c2() -> Arc<FiniteGroup> {
        FiniteGroup::from_permutations(&[(
            "t".into(),
            Permutation::from_cycles(&[vec![1, 2]], 0).unwrap(),
        )])
        .unwrap()
    }

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::from_permutations(&[
            (
                "a".into(),
                Permutation::from_cycles(&[vec![1, 2, 3]], 0).unwrap(),
            ),
            (
                "b".into(),
                Permutation::from_cycles(&[vec![1, 2]], 3).unwrap(),
            ),
        ])
        .unwrap()
    }

    #[test]
    fn group_ring_of_trivial_group() {
        let e = FiniteGroup::from_table(&[vec![0]]).unwrap();
        let ring = group_ring(&e).unwrap();
        assert_eq!(ring.rank(), 1);
        assert_eq!(ring.mul_vectors(&big(&[3]), &big(&[5])), big(&[15]));
    }

    #[test]
    fn group_ring_of_c2_squares_to_identity() {
        let ring = group_ring(&c2()).unwrap();
        // t·t = 1
        assert_eq!(ring.mul_vectors(&big(&[0, 1]), &big(&[0, 1])), big(&[1, 0]));
    }

    #[test]
    fn group_ring_basis_products_permute_for_s3() {
        let ring = group_ring(&s3()).unwrap();
        assert_eq!(ring.rank(), 6);
        for i in 0..6 {
            for j in 0..6 {
                let mut u = big(&[0; 6]);
                let mut v = big(&[0; 6]);
                u[i] = BigInt::one();
                v[j] = BigInt::one();
                let p = ring.mul_vectors(&u, &v);
                assert_eq!(p.iter().filter(|c| !c.is_zero()).count(), 1);
            }
        }
    }

    #[test]
    fn augmentation_ideal_of_c2() {
        let g = c2();
        let ring = group_ring(&g).unwrap();
        let full = crate::group::Subgroup::full(g.clone());
        let delta = augmentation_ideal(&ring, &full).unwrap();
        // spanned by t − 1; the vector of t−1 is (−1, 1)
        assert_eq!(delta.rank(), 1);
        assert!(delta.lattice().contains(&big(&[-1, 1])).unwrap());

        let trivial = crate::group::Subgroup::trivial(g.clone());
        assert!(augmentation_ideal(&ring, &trivial).unwrap().is_zero());
    }

    #[test]
    fn augmentation_ideal_rank_formula() {
        // rank = |G| − |G/R|
        let g = s3();
        let ring = group_ring(&g).unwrap();
        let a3 = normal_closure(&g, &[g.generator_element("a").unwrap()]);
        let r = augmentation_ideal(&ring, &a3).unwrap();
        assert_eq!(r.rank(), 6 - 2);
        let full = crate::group::Subgroup::full(g.clone());
        let delta = augmentation_ideal(&ring, &full).unwrap();
        assert_eq!(delta.rank(), 6 - 1);
    }

    #[test]
    fn delta_squared_in_c2_is_twice_delta() {
        let g = c2();
        let ring = group_ring(&g).unwrap();
        let delta = augmentation_ideal(&ring, &crate::group::Subgroup::full(g.clone())).unwrap();
        let sq = ideal_product(&delta, &delta).unwrap();
        // (t−1)² = −2(t−1)
        let two_delta =
            Ideal::from_lattice(ring.clone(), delta.lattice().scale(&BigInt::from(2))).unwrap();
        assert_eq!(sq, two_delta);
        // and a·zero = zero
        let z = Ideal::zero(ring.clone());
        assert!(ideal_product(&delta, &z).unwrap().is_zero());
    }

    #[test]
    fn symmetric_ideal_examples() {
        let g = c2();
        let ring = group_ring(&g).unwrap();
        let delta = augmentation_ideal(&ring, &crate::group::Subgroup::full(g.clone())).unwrap();
        // n = 2: ‖a,b‖ = ab + ba
        let s2 = symmetric_ideal(&[delta.clone(), delta.clone()]).unwrap();
        assert_eq!(s2, bd_ideal(&delta, &delta).unwrap());
        // n = 3 with all Δ: every term is Δ² = 2Δ
        let s3x = symmetric_ideal(&[delta.clone(), delta.clone(), delta.clone()]).unwrap();
        let two_delta =
            Ideal::from_lattice(ring.clone(), delta.lattice().scale(&BigInt::from(2))).unwrap();
        assert_eq!(s3x, two_delta);
    }

    #[test]
    fn symmetric_ideal_with_zero_member_matches_direct_expansion() {
        let g = s3();
        let ring = group_ring(&g).unwrap();
        let a3 = normal_closure(&g, &[g.generator_element("a").unwrap()]);
        let r = augmentation_ideal(&ring, &a3).unwrap();
        let s = augmentation_ideal(&ring, &crate::group::Subgroup::full(g.clone())).unwrap();
        let z = Ideal::zero(ring.clone());
        let sym = symmetric_ideal(&[r.clone(), s.clone(), z.clone()]).unwrap();
        // Direct expansion over the three partitions, both product orders.
        let mut expect = Ideal::zero(ring.clone());
        let pairs: [(Ideal, Ideal); 3] = [
            (r.clone(), ideal_intersect(&s, &z).unwrap()),
            (s.clone(), ideal_intersect(&r, &z).unwrap()),
            (z.clone(), ideal_intersect(&r, &s).unwrap()),
        ];
        for (x, y) in pairs {
            expect = ideal_sum(&expect, &ideal_product(&x, &y).unwrap()).unwrap();
            expect = ideal_sum(&expect, &ideal_product(&y, &x).unwrap()).unwrap();
        }
        assert_eq!(sym, expect);
    }

    #[test]
    fn symmetric_ideal_is_permutation_invariant() {
        let g = s3();
        let ring = group_ring(&g).unwrap();
        let a3 = normal_closure(&g, &[g.generator_element("a").unwrap()]);
        let r = augmentation_ideal(&ring, &a3).unwrap();
        let s = augmentation_ideal(&ring, &crate::group::Subgroup::full(g.clone())).unwrap();
        let sq = ideal_product(&s, &s).unwrap();
        let a = symmetric_ideal(&[r.clone(), s.clone(), sq.clone()]).unwrap();
        let b = symmetric_ideal(&[sq, r, s]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bd_ideal_of_equal_arguments_is_the_square() {
        let g = s3();
        let ring = group_ring(&g).unwrap();
        let a3 = normal_closure(&g, &[g.generator_element("a").unwrap()]);
        let r = augmentation_ideal(&ring, &a3).unwrap();
        assert_eq!(bd_ideal(&r, &r).unwrap(), ideal_product(&r, &r).unwrap());
    }

    #[test]
    fn modg_with_zero_t_reduces_to_bd() {
        let g = s3();
        let ring = group_ring(&g).unwrap();
        let a3 = normal_closure(&g, &[g.generator_element("a").unwrap()]);
        let r = augmentation_ideal(&ring, &a3).unwrap();
        let full = crate::group::Subgroup::full(g.clone());
        let s = augmentation_ideal(&ring, &full).unwrap();
        let z = Ideal::zero(ring.clone());
        assert_eq!(modg_ideal(&r, &s, &z).unwrap(), bd_ideal(&r, &s).unwrap());
    }

    #[test]
    fn dimension_subgroup_examples() {
        // G = C₂, a = 2Δ: t − 1 ∉ 2Δ, so D is trivial; identity always in.
        let g = c2();
        let ring = group_ring(&g).unwrap();
        let delta = augmentation_ideal(&ring, &crate::group::Subgroup::full(g.clone())).unwrap();
        let two_delta =
            Ideal::from_lattice(ring.clone(), delta.lattice().scale(&BigInt::from(2))).unwrap();
        let d = dimension_subgroup(&g, &two_delta).unwrap();
        assert!(d.is_trivial());

        // D(G, Δ(G)) = G.
        let d_full = dimension_subgroup(&g, &delta).unwrap();
        assert_eq!(d_full.order(), 2);
    }

    #[test]
    fn dimension_subgroup_bd_example_in_s3() {
        // R = A₃, S = S₃: D(G, rs+sr) = [R,S] = A₃.
        let g = s3();
        let ring = group_ring(&g).unwrap();
        let a3 = normal_closure(&g, &[g.generator_element("a").unwrap()]);
        let full = crate::group::Subgroup::full(g.clone());
        let r = augmentation_ideal(&ring, &a3).unwrap();
        let s = augmentation_ideal(&ring, &full).unwrap();
        let d = dimension_subgroup(&g, &bd_ideal(&r, &s).unwrap()).unwrap();
        assert_eq!(d, a3);
    }

    #[test]
    fn dimension_subgroup_monotone_in_the_ideal() {
        let g = s3();
        let ring = group_ring(&g).unwrap();
        let a3 = normal_closure(&g, &[g.generator_element("a").unwrap()]);
        let r = augmentation_ideal(&ring, &a3).unwrap();
        let full = augmentation_ideal(&ring, &crate::group::Subgroup::full(g.clone())).unwrap();
        let d_r = dimension_subgroup(&g, &r).unwrap();
        let d_full = dimension_subgroup(&g, &full).unwrap();
        assert!(d_r.is_subgroup_of(&d_full));
        // D(G, r) recovers R for augmentation ideals.
        assert_eq!(d_r, a3);
    }

    #[test]
    fn ambient_mismatch_is_detected() {
        let ra = group_ring(&c2()).unwrap();
        let rb = zero_multiplication_ring(2);
        let a = Ideal::full(ra);
        let b = Ideal::full(rb);
        assert!(matches!(ideal_sum(&a, &b), Err(RingError::AmbientMismatch)));
    }

    #[test]
    fn zero_ring_accepts_any_sublattice_as_ideal() {
        let ring = zero_multiplication_ring(2);
        let l = Lattice::from_generators(&[big(&[1, 0])], 2).unwrap();
        let i = Ideal::from_lattice(ring.clone(), l).unwrap();
        assert!(ideal_product(&i, &i).unwrap().is_zero());
    }

    #[test]
    fn non_ideal_lattice_is_rejected() {
        // In ℤ[C₂] the lattice spanned by e₀ alone is not an ideal:
        // t·1 = t escapes.
        let ring = group_ring(&c2()).unwrap();
        let l = Lattice::from_generators(&[big(&[1, 0])], 2).unwrap();
        assert!(matches!(
            Ideal::from_lattice(ring, l),
            Err(RingError::NotAnIdeal)
        ));
    }
}
