use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::abgroup::FgAbelianGroup;

use super::finite::FiniteGroup;
use super::GroupError;

/// Subgroup of a `FiniteGroup`, stored as a sorted vector of element
/// indices. The `normal` flag is computed (closure under all
/// conjugations), never assumed.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    normal: bool,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_parent(&self.parent, &other.parent)
    }
}
impl Eq for Subgroup {}

pub(crate) fn same_parent(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Subgroup {
    /// Verifies closure under product and inverse and wraps the member
    /// set; computes the normality flag.
    pub fn from_members(
        parent: Arc<FiniteGroup>,
        members: BTreeSet<usize>,
    ) -> Result<Self, GroupError> {
        let members: Vec<usize> = members.into_iter().collect();
        if members.first() != Some(&parent.identity()) {
            return Err(GroupError::NotASubgroup(
                "member set does not contain the identity".into(),
            ));
        }
        for &x in &members {
            if x >= parent.order() {
                return Err(GroupError::NotASubgroup(format!(
                    "element {x} out of range"
                )));
            }
            if members.binary_search(&parent.inv(x)).is_err() {
                return Err(GroupError::NotASubgroup(format!(
                    "inverse of {x} missing"
                )));
            }
            for &y in &members {
                if members.binary_search(&parent.mul(x, y)).is_err() {
                    return Err(GroupError::NotASubgroup(format!(
                        "product {x}·{y} escapes the set"
                    )));
                }
            }
        }
        let normal = is_normal_set(&parent, &members);
        Ok(Subgroup {
            parent,
            members,
            normal,
        })
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        Subgroup {
            parent,
            members: vec![0],
            normal: true,
        }
    }

    pub fn full(parent: Arc<FiniteGroup>) -> Self {
        let members: Vec<usize> = (0..parent.order()).collect();
        Subgroup {
            parent,
            members,
            normal: true,
        }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        same_parent(&self.parent, &other.parent)
            && self.members.iter().all(|&x| other.contains(x))
    }

    fn check_same_parent(&self, other: &Subgroup) -> Result<(), GroupError> {
        if !same_parent(&self.parent, &other.parent) {
            return Err(GroupError::ParentMismatch);
        }
        Ok(())
    }

    /// Set intersection (always a subgroup).
    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup, GroupError> {
        self.check_same_parent(other)?;
        let members: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        let normal = self.normal && other.normal
            || is_normal_set(&self.parent, &members);
        Ok(Subgroup {
            parent: self.parent.clone(),
            members,
            normal,
        })
    }
}

fn is_normal_set(parent: &FiniteGroup, members: &[usize]) -> bool {
    members.iter().all(|&x| {
        (0..parent.order()).all(|g| members.binary_search(&parent.conjugate(x, g)).is_ok())
    })
}

/// Multiplicative closure of a seed set (a subgroup, since the group is
/// finite).
fn closure(parent: &FiniteGroup, seeds: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; parent.order()];
    in_set[parent.identity()] = true;
    let mut members = vec![parent.identity()];
    let mut queue: Vec<usize> = Vec::new();
    for &s in seeds {
        if !in_set[s] {
            in_set[s] = true;
            members.push(s);
            queue.push(s);
        }
    }
    let gens: Vec<usize> = queue.clone();
    let mut cursor = 0;
    // Products with the generating set from both sides reach everything.
    while cursor < members.len() {
        let x = members[cursor];
        for &g in &gens {
            for y in [parent.mul(x, g), parent.mul(g, x)] {
                if !in_set[y] {
                    in_set[y] = true;
                    members.push(y);
                }
            }
        }
        cursor += 1;
    }
    members.sort_unstable();
    members
}

/// Smallest normal subgroup containing the seeds: the subgroup generated
/// by all conjugates of the seeds.
pub fn normal_closure(parent: &Arc<FiniteGroup>, seeds: &[usize]) -> Subgroup {
    let mut conjugates = BTreeSet::new();
    for &s in seeds {
        for g in 0..parent.order() {
            conjugates.insert(parent.conjugate(s, g));
        }
    }
    let seedvec: Vec<usize> = conjugates.into_iter().collect();
    let members = closure(parent, &seedvec);
    debug_assert!(is_normal_set(parent, &members));
    Subgroup {
        parent: parent.clone(),
        members,
        normal: true,
    }
}

/// Subgroup generated by a set of elements (no conjugation).
pub fn generated_subgroup(parent: &Arc<FiniteGroup>, seeds: &[usize]) -> Subgroup {
    let members = closure(parent, seeds);
    let normal = is_normal_set(parent, &members);
    Subgroup {
        parent: parent.clone(),
        members,
        normal,
    }
}

/// The set product `{xy : x ∈ a, y ∈ b}`; requires at least one normal
/// factor (otherwise the set need not be a subgroup) and verifies the
/// result.
pub fn subgroup_product(a: &Subgroup, b: &Subgroup) -> Result<Subgroup, GroupError> {
    a.check_same_parent(b)?;
    if !a.is_normal() && !b.is_normal() {
        return Err(GroupError::ProductNotSubgroup);
    }
    let parent = a.parent().clone();
    let mut in_set = vec![false; parent.order()];
    for &x in a.members() {
        for &y in b.members() {
            in_set[parent.mul(x, y)] = true;
        }
    }
    let members: Vec<usize> = (0..parent.order()).filter(|&i| in_set[i]).collect();
    // With a normal factor the set product is closed; verify anyway.
    for &x in &members {
        if members.binary_search(&parent.inv(x)).is_err() {
            return Err(GroupError::ProductNotSubgroup);
        }
        for &y in &members {
            if members.binary_search(&parent.mul(x, y)).is_err() {
                return Err(GroupError::ProductNotSubgroup);
            }
        }
    }
    let normal = (a.is_normal() && b.is_normal()) || is_normal_set(&parent, &members);
    Ok(Subgroup {
        parent,
        members,
        normal,
    })
}

/// Subgroup generated by all commutators `x⁻¹y⁻¹xy`, `x ∈ a`, `y ∈ b`.
/// Both inputs must be normal; the result is then normal as well
/// (verified, not assumed).
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup) -> Result<Subgroup, GroupError> {
    a.check_same_parent(b)?;
    if !a.is_normal() || !b.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let parent = a.parent().clone();
    let mut seeds = BTreeSet::new();
    for &x in a.members() {
        for &y in b.members() {
            seeds.insert(parent.commutator(x, y));
        }
    }
    let seedvec: Vec<usize> = seeds.into_iter().collect();
    let members = closure(&parent, &seedvec);
    let normal = is_normal_set(&parent, &members);
    debug_assert!(normal, "commutator of normal subgroups must be normal");
    Ok(Subgroup {
        parent,
        members,
        normal,
    })
}

/// The symmetric commutator `‖R₁,…,Rₙ‖`: the product over all unordered
/// partitions of `{1..n}` into two nonempty parts `(I, J)` of
/// `[∩_{i∈I} Rᵢ, ∩_{j∈J} Rⱼ]`.
pub fn symmetric_commutator(subgroups: &[Subgroup]) -> Result<Subgroup, GroupError> {
    let n = subgroups.len();
    if !(2..=6).contains(&n) {
        return Err(GroupError::ArityOutOfRange { n, min: 2, max: 6 });
    }
    for s in subgroups {
        if !s.is_normal() {
            return Err(GroupError::NotNormal);
        }
        subgroups[0].check_same_parent(s)?;
    }
    let parent = subgroups[0].parent().clone();
    let mut seeds: BTreeSet<usize> = BTreeSet::new();
    // Masks with bit 0 set enumerate each unordered partition once.
    for mask in 0..(1u32 << n) {
        if mask & 1 == 0 || mask == (1 << n) - 1 {
            continue;
        }
        let left = intersect_over(subgroups, mask)?;
        let right = intersect_over(subgroups, !mask & ((1 << n) - 1))?;
        for &x in left.members() {
            for &y in right.members() {
                seeds.insert(parent.commutator(x, y));
            }
        }
    }
    let seedvec: Vec<usize> = seeds.into_iter().collect();
    let members = closure(&parent, &seedvec);
    let normal = is_normal_set(&parent, &members);
    debug_assert!(normal);
    Ok(Subgroup {
        parent,
        members,
        normal,
    })
}

fn intersect_over(subgroups: &[Subgroup], mask: u32) -> Result<Subgroup, GroupError> {
    let mut acc: Option<Subgroup> = None;
    for (i, s) in subgroups.iter().enumerate() {
        if mask & (1 << i) != 0 {
            acc = Some(match acc {
                None => s.clone(),
                Some(a) => a.intersect(s)?,
            });
        }
    }
    acc.ok_or(GroupError::ArityOutOfRange {
        n: 0,
        min: 1,
        max: 6,
    })
}

/// Product `∏_{j∈J} R_j` of normal subgroups (their join).
fn product_over(subgroups: &[Subgroup], mask: u32) -> Result<Subgroup, GroupError> {
    let mut acc: Option<Subgroup> = None;
    for (i, s) in subgroups.iter().enumerate() {
        if mask & (1 << i) != 0 {
            acc = Some(match acc {
                None => s.clone(),
                Some(a) => subgroup_product(&a, s)?,
            });
        }
    }
    acc.ok_or(GroupError::ArityOutOfRange {
        n: 0,
        min: 1,
        max: 6,
    })
}

/// Connectivity of a tuple of normal subgroups: for all `I` with
/// `|I| ≥ 2` and nonempty `J`,
/// `(∩_{i∈I} Rᵢ)(∏_{j∈J} Rⱼ) = ∩_{i∈I} (Rᵢ ∏_{j∈J} Rⱼ)`.
/// Tuples of length ≤ 2 are connected by convention.
pub fn is_connected_tuple(subgroups: &[Subgroup]) -> Result<bool, GroupError> {
    for s in subgroups {
        if !s.is_normal() {
            return Err(GroupError::NotNormal);
        }
        subgroups[0].check_same_parent(s)?;
    }
    let n = subgroups.len();
    if n <= 2 {
        return Ok(true);
    }
    let full = (1u32 << n) - 1;
    for i_mask in 1..=full {
        if (i_mask as u32).count_ones() < 2 {
            continue;
        }
        for j_mask in 1..=full {
            let prod = product_over(subgroups, j_mask)?;
            let lhs = subgroup_product(&intersect_over(subgroups, i_mask)?, &prod)?;
            let mut rhs: Option<Subgroup> = None;
            for (i, s) in subgroups.iter().enumerate() {
                if i_mask & (1 << i) != 0 {
                    let term = subgroup_product(s, &prod)?;
                    rhs = Some(match rhs {
                        None => term,
                        Some(r) => r.intersect(&term)?,
                    });
                }
            }
            if rhs.expect("|I| ≥ 2") != lhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Structure of the quotient `d/n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStructure {
    pub order: usize,
    pub exponent: BigInt,
    pub abelian: bool,
    /// Invariant factors when the quotient is abelian.
    pub invariant_factors: Option<Vec<BigInt>>,
}

impl QuotientStructure {
    pub fn abelian_group(&self) -> Option<FgAbelianGroup> {
        self.invariant_factors
            .as_ref()
            .map(|f| FgAbelianGroup::from_cyclic_orders(0, f))
    }
}

/// Builds the coset group of `d` modulo `n` (requires `n` normal in the
/// parent and `n ⊆ d`) and reads off exponent, abelian flag and — for
/// abelian quotients — invariant factors.
pub fn quotient_structure(d: &Subgroup, n: &Subgroup) -> Result<QuotientStructure, GroupError> {
    d.check_same_parent(n)?;
    if !n.is_normal() {
        return Err(GroupError::NotNormal);
    }
    if !n.is_subgroup_of(d) {
        return Err(GroupError::ContainmentViolation);
    }
    let parent = d.parent();
    // Coset ids in order of smallest representative.
    let mut coset_of = vec![usize::MAX; parent.order()];
    let mut reps: Vec<usize> = Vec::new();
    for &x in d.members() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &m in n.members() {
            coset_of[parent.mul(x, m)] = id;
        }
    }
    let q = reps.len();
    let mut table = vec![0usize; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[parent.mul(a, b)];
        }
    }
    let mul = |a: usize, b: usize| table[a * q + b];
    let elem_order = |x: usize| {
        let mut k = 1usize;
        let mut p = x;
        while p != 0 {
            p = mul(p, x);
            k += 1;
        }
        k as u64
    };
    let exponent = (0..q).fold(1u64, |acc, x| num_integer::lcm(acc, elem_order(x)));
    let abelian = (0..q).all(|a| (a..q).all(|b| mul(a, b) == mul(b, a)));
    let invariant_factors = abelian.then(|| {
        let mut factors = abelian_invariants(&table, q);
        factors.retain(|f| *f > 1);
        factors.into_iter().map(BigInt::from).collect()
    });
    Ok(QuotientStructure {
        order: q,
        exponent: BigInt::from(exponent),
        abelian,
        invariant_factors,
    })
}

/// Invariant factors (ascending, possibly with 1s) of a finite abelian
/// group given by a multiplication table: split off a cyclic subgroup of
/// maximal order and recurse on the quotient.
fn abelian_invariants(table: &[usize], q: usize) -> Vec<u64> {
    if q == 1 {
        return vec![];
    }
    let mul = |a: usize, b: usize| table[a * q + b];
    let elem_order = |x: usize| {
        let mut k = 1usize;
        let mut p = x;
        while p != 0 {
            p = mul(p, x);
            k += 1;
        }
        k
    };
    let x = (0..q).max_by_key(|&x| elem_order(x)).unwrap();
    let e = elem_order(x);
    // Cyclic subgroup ⟨x⟩ and its cosets.
    let mut cyc = vec![false; q];
    let mut p = 0usize;
    loop {
        cyc[p] = true;
        p = mul(p, x);
        if p == 0 {
            break;
        }
    }
    let mut coset_of = vec![usize::MAX; q];
    let mut reps = Vec::new();
    for y in 0..q {
        if coset_of[y] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(y);
        for z in 0..q {
            if cyc[z] {
                coset_of[mul(y, z)] = id;
            }
        }
    }
    let qq = reps.len();
    let mut sub_table = vec![0usize; qq * qq];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            sub_table[i * qq + j] = coset_of[mul(a, b)];
        }
    }
    let mut factors = abelian_invariants(&sub_table, qq);
    factors.push(e as u64);
    factors
}

#[cfg(test)]
mod tests {
    use super::super::perm::Permutation;
    use super::*;

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

    fn q8() -> Arc<FiniteGroup> {
        FiniteGroup::from_permutations(&[
            (
                "i".into(),
                Permutation::from_cycles(&[vec![1, 3, 2, 4], vec![5, 7, 6, 8]], 0).unwrap(),
            ),
            (
                "j".into(),
                Permutation::from_cycles(&[vec![1, 5, 2, 6], vec![3, 8, 4, 7]], 0).unwrap(),
            ),
        ])
        .unwrap()
    }

    fn a3(g: &Arc<FiniteGroup>) -> Subgroup {
        let three_cycle = g.generator_element("a").unwrap();
        normal_closure(g, &[three_cycle])
    }

    #[test]
    fn normal_closure_examples() {
        let g = s3();
        assert!(normal_closure(&g, &[]).is_trivial());
        assert!(normal_closure(&g, &[0]).is_trivial());
        let a = a3(&g);
        assert_eq!(a.order(), 3);
        assert!(a.is_normal());
    }

    #[test]
    fn product_examples() {
        let g = s3();
        let a = a3(&g);
        let t = Subgroup::trivial(g.clone());
        assert_eq!(subgroup_product(&a, &t).unwrap(), a);
        assert_eq!(subgroup_product(&a, &a).unwrap(), a);
        let b = generated_subgroup(&g, &[g.generator_element("b").unwrap()]);
        // A₃ · ⟨(1 2)⟩ = S₃
        let p = subgroup_product(&a, &b).unwrap();
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn product_requires_a_normal_factor() {
        // In S₃ two distinct transposition subgroups are both non-normal.
        let g = s3();
        let b1 = generated_subgroup(&g, &[g.generator_element("b").unwrap()]);
        // conjugate of b by a is another transposition subgroup
        let a_elem = g.generator_element("a").unwrap();
        let b_elem = g.generator_element("b").unwrap();
        let b2 = generated_subgroup(&g, &[g.conjugate(b_elem, a_elem)]);
        assert!(matches!(
            subgroup_product(&b1, &b2),
            Err(GroupError::ProductNotSubgroup)
        ));
    }

    #[test]
    fn commutator_examples() {
        let g = s3();
        let a = a3(&g);
        let full = Subgroup::full(g.clone());
        let t = Subgroup::trivial(g.clone());
        assert!(commutator_subgroup(&a, &t).unwrap().is_trivial());
        // [A₃, S₃] = A₃
        let c = commutator_subgroup(&a, &full).unwrap();
        assert_eq!(c, a);
        // symmetry
        assert_eq!(
            commutator_subgroup(&a, &full).unwrap(),
            commutator_subgroup(&full, &a).unwrap()
        );
    }

    #[test]
    fn symmetric_commutator_small_cases() {
        let g = s3();
        let full = Subgroup::full(g.clone());
        let t = Subgroup::trivial(g.clone());
        let a = a3(&g);

        // n = 2 reduces to the plain commutator.
        let s2 = symmetric_commutator(&[a.clone(), full.clone()]).unwrap();
        assert_eq!(s2, commutator_subgroup(&a, &full).unwrap());

        // all G: every bracket is [G, G] = A₃.
        let s3x = symmetric_commutator(&[full.clone(), full.clone(), full.clone()]).unwrap();
        assert_eq!(s3x, a);

        // one factor trivial: everything collapses.
        let sz = symmetric_commutator(&[full.clone(), full.clone(), t]).unwrap();
        assert!(sz.is_trivial());
    }

    #[test]
    fn symmetric_commutator_q8_triple_is_trivial() {
        let g = q8();
        let i = normal_closure(&g, &[g.generator_element("i").unwrap()]);
        let j = normal_closure(&g, &[g.generator_element("j").unwrap()]);
        let k_elem = g.mul(
            g.generator_element("i").unwrap(),
            g.generator_element("j").unwrap(),
        );
        let k = normal_closure(&g, &[k_elem]);
        assert_eq!((i.order(), j.order(), k.order()), (4, 4, 4));
        let s = symmetric_commutator(&[i, j, k]).unwrap();
        assert!(s.is_trivial());
    }

    #[test]
    fn symmetric_commutator_matches_theorem_expansion_for_triples() {
        // ‖R,S,T‖ = [R,S∩T][S,R∩T][T,R∩S] computed directly.
        let g = s3();
        let r = a3(&g);
        let s = Subgroup::full(g.clone());
        let t = a3(&g);
        let lhs = symmetric_commutator(&[r.clone(), s.clone(), t.clone()]).unwrap();
        let b1 = commutator_subgroup(&r, &s.intersect(&t).unwrap()).unwrap();
        let b2 = commutator_subgroup(&s, &r.intersect(&t).unwrap()).unwrap();
        let b3 = commutator_subgroup(&t, &r.intersect(&s).unwrap()).unwrap();
        let rhs = subgroup_product(&subgroup_product(&b1, &b2).unwrap(), &b3).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn arity_bounds() {
        let g = s3();
        let full = Subgroup::full(g.clone());
        assert!(symmetric_commutator(&[full.clone()]).is_err());
        let seven = vec![full; 7];
        assert!(symmetric_commutator(&seven).is_err());
    }

    #[test]
    fn connectivity_examples() {
        // Klein group with its three order-2 subgroups is not connected.
        let v4 = FiniteGroup::from_permutations(&[
            (
                "a".into(),
                Permutation::from_cycles(&[vec![1, 2]], 4).unwrap(),
            ),
            (
                "b".into(),
                Permutation::from_cycles(&[vec![3, 4]], 4).unwrap(),
            ),
        ])
        .unwrap();
        let a = generated_subgroup(&v4, &[v4.generator_element("a").unwrap()]);
        let b = generated_subgroup(&v4, &[v4.generator_element("b").unwrap()]);
        let ab = generated_subgroup(&v4, &[v4.mul(
            v4.generator_element("a").unwrap(),
            v4.generator_element("b").unwrap(),
        )]);
        assert!(!is_connected_tuple(&[a.clone(), b.clone(), ab]).unwrap());
        // Pairs are connected by convention; (G,G,G) trivially satisfies it.
        assert!(is_connected_tuple(&[a.clone(), b]).unwrap());
        let full = Subgroup::full(v4.clone());
        assert!(is_connected_tuple(&[full.clone(), full.clone(), full]).unwrap());
    }

    #[test]
    fn quotient_structure_examples() {
        let g = s3();
        let a = a3(&g);
        let full = Subgroup::full(g.clone());

        let q = quotient_structure(&a, &a).unwrap();
        assert_eq!(q.order, 1);
        assert_eq!(q.exponent, BigInt::from(1));

        let q = quotient_structure(&full, &a).unwrap();
        assert_eq!(q.order, 2);
        assert_eq!(q.exponent, BigInt::from(2));
        assert_eq!(q.invariant_factors, Some(vec![BigInt::from(2)]));

        let t = Subgroup::trivial(g.clone());
        let q = quotient_structure(&a, &t).unwrap();
        assert_eq!(q.order, 3);
        assert_eq!(q.exponent, BigInt::from(3));
        assert_eq!(q.invariant_factors, Some(vec![BigInt::from(3)]));

        // Non-abelian quotient: S₃ / 1.
        let q = quotient_structure(&full, &t).unwrap();
        assert!(!q.abelian);
        assert_eq!(q.exponent, BigInt::from(6));
        assert!(q.invariant_factors.is_none());
    }

    #[test]
    fn quotient_checks_preconditions() {
        let g = s3();
        let a = a3(&g);
        let b = generated_subgroup(&g, &[g.generator_element("b").unwrap()]);
        // b is not normal
        assert!(quotient_structure(&Subgroup::full(g.clone()), &b).is_err());
        // containment violation
        assert!(quotient_structure(&b, &a).is_err());
    }
}
