//! Theorem-level verification: the exponent-2 property of generalized
//! dimension quotients for subgroup triples, the two identifications
//! `D(G, rs+sr) = [R,S]` and `D(G, rs+sr+(r∩s)t+t(r∩s)) = [R,S][R∩S,T]`,
//! the n-fold inclusion `‖R₁..Rₙ‖ ⊆ D(G, ‖r₁..rₙ‖)`, generalized
//! quotients for subgroup and ideal families, and the finite-quotient
//! probe of the free-group example — all over a built-in corpus of small
//! groups with enumerated normal subgroups.

mod corpus;
mod harness;

pub use corpus::{all_subgroups, builtin_corpus, normal_subgroups, CorpusEntry, EnumeratedSubgroup};
pub use harness::{
    probe_free_sweep, run_corpus, CheckKind, CorpusConfig, RunReport, RunSummary,
};

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::exactlinalg::{quotient_invariants, LinalgError, QuotientInvariants};
use crate::group::{
    commutator_subgroup, normal_closure, quotient_structure, subgroup_product,
    symmetric_commutator, FiniteGroup, GroupError, QuotientStructure, Subgroup,
};
use crate::groupring::{
    augmentation_ideal, bd_ideal, dimension_subgroup, group_ring, ideal_intersect, modg_ideal,
    symmetric_ideal, AmbientRing, Ideal, RingError,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("check requires {expected} subgroups, got {got}")]
    WrongArity { expected: String, got: usize },
}

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupDescriptor {
    pub name: String,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupDescriptor {
    pub name: String,
    pub order: u64,
    pub generators: Vec<String>,
}

/// Exponent in a report: a number, or the string "infinite".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExponentValue {
    Finite(u64),
    Infinite,
}

impl Serialize for ExponentValue {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            ExponentValue::Finite(e) => ser.serialize_u64(*e),
            ExponentValue::Infinite => ser.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDescriptor {
    pub invariant_factors: Vec<u64>,
    pub exponent: ExponentValue,
    pub abelian: bool,
}

impl QuotientDescriptor {
    fn from_group_quotient(q: &QuotientStructure) -> Self {
        QuotientDescriptor {
            invariant_factors: q
                .invariant_factors
                .clone()
                .unwrap_or_default()
                .iter()
                .map(big_to_u64)
                .collect(),
            exponent: ExponentValue::Finite(big_to_u64(&q.exponent)),
            abelian: q.abelian,
        }
    }

    fn from_lattice_quotient(q: &QuotientInvariants) -> Self {
        QuotientDescriptor {
            invariant_factors: q.invariant_factors.iter().map(big_to_u64).collect(),
            exponent: match q.exponent() {
                Some(e) => ExponentValue::Finite(big_to_u64(&e)),
                None => ExponentValue::Infinite,
            },
            abelian: true,
        }
    }
}

fn big_to_u64(b: &BigInt) -> u64 {
    b.to_u64().expect("reported quantity fits in u64")
}

/// One theorem-check outcome. Serializes in the report schema's field
/// order; `elapsed_ms` is appended last and zeroed under deterministic
/// output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub check: String,
    pub group: GroupDescriptor,
    pub subgroups: Vec<SubgroupDescriptor>,
    pub d_order: Option<u64>,
    pub norm_order: Option<u64>,
    pub quotient: Option<QuotientDescriptor>,
    pub verdict: Verdict,
    pub detail: String,
    pub elapsed_ms: u64,
}

impl VerificationRecord {
    pub fn zero_timing(&mut self) {
        self.elapsed_ms = 0;
    }
}

/// A normal subgroup together with its report labels.
#[derive(Clone, Debug)]
pub struct NamedSubgroup {
    pub name: String,
    pub generators: Vec<String>,
    pub subgroup: Subgroup,
}

impl NamedSubgroup {
    pub fn new(name: impl Into<String>, generators: Vec<String>, subgroup: Subgroup) -> Self {
        NamedSubgroup {
            name: name.into(),
            generators,
            subgroup,
        }
    }

    fn descriptor(&self) -> SubgroupDescriptor {
        SubgroupDescriptor {
            name: self.name.clone(),
            order: self.subgroup.order() as u64,
            generators: self.generators.clone(),
        }
    }
}

/// Shared per-group state: the group ring and a cache of augmentation
/// ideals keyed by member set.
pub struct GroupContext {
    group: Arc<FiniteGroup>,
    ring: Arc<AmbientRing>,
    aug_cache: std::collections::HashMap<Vec<usize>, Ideal>,
}

impl GroupContext {
    pub fn new(group: Arc<FiniteGroup>) -> Result<Self, VerifyError> {
        let ring = group_ring(&group)?;
        Ok(GroupContext {
            group,
            ring,
            aug_cache: Default::default(),
        })
    }

    /// Precomputes the augmentation ideals of the given subgroups.
    pub fn precompute(&mut self, subs: &[Subgroup]) -> Result<(), VerifyError> {
        for s in subs {
            let key = s.members().to_vec();
            if !self.aug_cache.contains_key(&key) {
                let ideal = augmentation_ideal(&self.ring, s)?;
                self.aug_cache.insert(key, ideal);
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn ring(&self) -> &Arc<AmbientRing> {
        &self.ring
    }

    pub fn augmentation(&self, s: &Subgroup) -> Result<Ideal, VerifyError> {
        if let Some(i) = self.aug_cache.get(s.members()) {
            return Ok(i.clone());
        }
        Ok(augmentation_ideal(&self.ring, s)?)
    }

    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor {
            name: if self.group.name().is_empty() {
                format!("order{}", self.group.order())
            } else {
                self.group.name().to_string()
            },
            order: self.group.order() as u64,
        }
    }
}

fn record_base(
    check: &str,
    ctx: &GroupContext,
    subs: &[&NamedSubgroup],
) -> (VerificationRecord, std::time::Instant) {
    (
        VerificationRecord {
            check: check.to_string(),
            group: ctx.descriptor(),
            subgroups: subs.iter().map(|s| s.descriptor()).collect(),
            d_order: None,
            norm_order: None,
            quotient: None,
            verdict: Verdict::Inapplicable,
            detail: String::new(),
            elapsed_ms: 0,
        },
        std::time::Instant::now(),
    )
}

fn finish(mut rec: VerificationRecord, started: std::time::Instant) -> VerificationRecord {
    rec.elapsed_ms = started.elapsed().as_millis() as u64;
    rec
}

/// Theorem check: every `g ∈ D(G, ‖r,s,t‖)` satisfies `g² ∈ ‖R,S,T‖`;
/// equivalently the quotient `D/‖R,S,T‖` has exponent dividing 2.
pub fn check_exponent2(
    ctx: &GroupContext,
    r: &NamedSubgroup,
    s: &NamedSubgroup,
    t: &NamedSubgroup,
) -> Result<VerificationRecord, VerifyError> {
    let (mut rec, started) = record_base("exp2", ctx, &[r, s, t]);
    let norm = symmetric_commutator(&[
        r.subgroup.clone(),
        s.subgroup.clone(),
        t.subgroup.clone(),
    ])?;
    let ideal = symmetric_ideal(&[
        ctx.augmentation(&r.subgroup)?,
        ctx.augmentation(&s.subgroup)?,
        ctx.augmentation(&t.subgroup)?,
    ])?;
    let d = dimension_subgroup(ctx.group(), &ideal)?;
    rec.d_order = Some(d.order() as u64);
    rec.norm_order = Some(norm.order() as u64);
    if !norm.is_subgroup_of(&d) {
        rec.verdict = Verdict::Fail;
        rec.detail = "symmetric commutator is not contained in the dimension subgroup".into();
        return Ok(finish(rec, started));
    }
    let q = quotient_structure(&d, &norm)?;
    rec.quotient = Some(QuotientDescriptor::from_group_quotient(&q));
    // The literal statement, pointwise.
    let g = ctx.group();
    let squares_ok = d.members().iter().all(|&x| norm.contains(g.mul(x, x)));
    let exponent_ok = (BigInt::from(2) % &q.exponent) == BigInt::from(0)
        || q.exponent == BigInt::from(1)
        || q.exponent == BigInt::from(2);
    rec.verdict = if squares_ok && exponent_ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    rec.detail = format!(
        "exponent {} of D/‖R,S,T‖ {} 2; pointwise squares {}",
        q.exponent,
        if exponent_ok { "divides" } else { "does not divide" },
        if squares_ok { "land in ‖R,S,T‖" } else { "escape ‖R,S,T‖" },
    );
    Ok(finish(rec, started))
}

/// Identity check: `D(G, rs + sr) = [R, S]` as exact subgroup equality.
pub fn check_bd(
    ctx: &GroupContext,
    r: &NamedSubgroup,
    s: &NamedSubgroup,
) -> Result<VerificationRecord, VerifyError> {
    let (mut rec, started) = record_base("bd", ctx, &[r, s]);
    let ideal = bd_ideal(&ctx.augmentation(&r.subgroup)?, &ctx.augmentation(&s.subgroup)?)?;
    let d = dimension_subgroup(ctx.group(), &ideal)?;
    let bracket = commutator_subgroup(&r.subgroup, &s.subgroup)?;
    rec.d_order = Some(d.order() as u64);
    rec.norm_order = Some(bracket.order() as u64);
    if bracket.is_subgroup_of(&d) {
        let q = quotient_structure(&d, &bracket)?;
        rec.quotient = Some(QuotientDescriptor::from_group_quotient(&q));
    }
    rec.verdict = if d == bracket {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    rec.detail = if d == bracket {
        "both sides agree".into()
    } else {
        "sides differ".into()
    };
    Ok(finish(rec, started))
}

/// Identity check: `D(G, rs+sr+(r∩s)t+t(r∩s)) = [R,S][R∩S,T]`; for
/// trivial `T` the sides must coincide with the two-subgroup identity.
pub fn check_modg(
    ctx: &GroupContext,
    r: &NamedSubgroup,
    s: &NamedSubgroup,
    t: &NamedSubgroup,
) -> Result<VerificationRecord, VerifyError> {
    let (mut rec, started) = record_base("modg", ctx, &[r, s, t]);
    let ri = ctx.augmentation(&r.subgroup)?;
    let si = ctx.augmentation(&s.subgroup)?;
    let ti = ctx.augmentation(&t.subgroup)?;
    let ideal = modg_ideal(&ri, &si, &ti)?;
    let d = dimension_subgroup(ctx.group(), &ideal)?;
    let meet = r.subgroup.intersect(&s.subgroup)?;
    let rhs = subgroup_product(
        &commutator_subgroup(&r.subgroup, &s.subgroup)?,
        &commutator_subgroup(&meet, &t.subgroup)?,
    )?;
    rec.d_order = Some(d.order() as u64);
    rec.norm_order = Some(rhs.order() as u64);
    if rhs.is_subgroup_of(&d) {
        let q = quotient_structure(&d, &rhs)?;
        rec.quotient = Some(QuotientDescriptor::from_group_quotient(&q));
    }
    let mut pass = d == rhs;
    let mut detail = if pass {
        "both sides agree".to_string()
    } else {
        "sides differ".to_string()
    };
    if t.subgroup.is_trivial() {
        // Must degenerate to the two-subgroup identity byte for byte.
        let bd = check_bd(ctx, r, s)?;
        let consistent =
            bd.d_order == rec.d_order && bd.norm_order == rec.norm_order && bd.verdict == Verdict::Pass;
        if !consistent {
            pass = false;
        }
        detail.push_str("; trivial T degenerates to the two-subgroup identity");
    }
    rec.verdict = if pass { Verdict::Pass } else { Verdict::Fail };
    rec.detail = detail;
    Ok(finish(rec, started))
}

/// Inclusion check: `‖R₁..Rₙ‖ ⊆ D(G, ‖r₁..rₙ‖)` for n = 2..4.
pub fn check_inclusion_n(
    ctx: &GroupContext,
    subs: &[NamedSubgroup],
) -> Result<VerificationRecord, VerifyError> {
    let refs: Vec<&NamedSubgroup> = subs.iter().collect();
    let (mut rec, started) = record_base("incl", ctx, &refs);
    let n = subs.len();
    if !(2..=4).contains(&n) {
        return Err(VerifyError::WrongArity {
            expected: "2..=4".into(),
            got: n,
        });
    }
    let groups: Vec<Subgroup> = subs.iter().map(|s| s.subgroup.clone()).collect();
    let norm = symmetric_commutator(&groups)?;
    let ideals: Vec<Ideal> = subs
        .iter()
        .map(|s| ctx.augmentation(&s.subgroup))
        .collect::<Result<_, _>>()?;
    let ideal = symmetric_ideal(&ideals)?;
    let d = dimension_subgroup(ctx.group(), &ideal)?;
    rec.d_order = Some(d.order() as u64);
    rec.norm_order = Some(norm.order() as u64);
    let contained = norm.is_subgroup_of(&d);
    if contained {
        let q = quotient_structure(&d, &norm)?;
        rec.quotient = Some(QuotientDescriptor::from_group_quotient(&q));
    }
    rec.verdict = if contained { Verdict::Pass } else { Verdict::Fail };
    rec.detail = if contained {
        format!("‖R₁..R{n}‖ ⊆ D")
    } else {
        "inclusion fails".into()
    };
    Ok(finish(rec, started))
}

/// The generalized quotient `(⋂ᵢ Kᵢ) / ‖K₀,…,Kₙ‖` for a family of normal
/// subgroups, as pure subgroup calculus.
pub fn generalized_quotient(subs: &[Subgroup]) -> Result<QuotientStructure, VerifyError> {
    if subs.len() < 2 {
        return Err(VerifyError::WrongArity {
            expected: "at least 2".into(),
            got: subs.len(),
        });
    }
    let norm = symmetric_commutator(subs)?;
    let mut meet = subs[0].clone();
    for s in &subs[1..] {
        meet = meet.intersect(s)?;
    }
    Ok(quotient_structure(&meet, &norm)?)
}

/// The generalized ideal quotient `(⋂ᵢ kᵢ) / ‖k₀,…,kₙ‖`.
pub fn generalized_ideal_quotient(ideals: &[Ideal]) -> Result<QuotientInvariants, VerifyError> {
    if ideals.len() < 2 {
        return Err(VerifyError::WrongArity {
            expected: "at least 2".into(),
            got: ideals.len(),
        });
    }
    let norm = symmetric_ideal(ideals)?;
    let mut meet = ideals[0].clone();
    for i in &ideals[1..] {
        meet = ideal_intersect(&meet, i)?;
    }
    Ok(quotient_invariants(norm.lattice(), meet.lattice())?)
}

/// Relates the group-theoretic quotient `A = (⋂Rᵢ)/‖R₁..Rₙ‖` and the
/// generalized dimension quotient `B = D(G,‖r₁..rₙ‖)/‖R₁..Rₙ‖`. Since
/// `D(G, rᵢ) = Rᵢ`, the dimension subgroup lies inside the intersection,
/// so `B ⊆ A`; both structures and the relative quotient `A/B` are
/// reported. For n = 3 the exponent-2 verdict on `B` is the headline
/// theorem.
pub fn kernel_of_dimension_map(
    ctx: &GroupContext,
    subs: &[NamedSubgroup],
) -> Result<VerificationRecord, VerifyError> {
    let refs: Vec<&NamedSubgroup> = subs.iter().collect();
    let (mut rec, started) = record_base("kernel", ctx, &refs);
    let n = subs.len();
    let groups: Vec<Subgroup> = subs.iter().map(|s| s.subgroup.clone()).collect();
    let norm = symmetric_commutator(&groups)?;
    let ideals: Vec<Ideal> = subs
        .iter()
        .map(|s| ctx.augmentation(&s.subgroup))
        .collect::<Result<_, _>>()?;
    let d = dimension_subgroup(ctx.group(), &symmetric_ideal(&ideals)?)?;
    let mut meet = groups[0].clone();
    for s in &groups[1..] {
        meet = meet.intersect(s)?;
    }
    rec.d_order = Some(d.order() as u64);
    rec.norm_order = Some(norm.order() as u64);
    if !d.is_subgroup_of(&meet) || !norm.is_subgroup_of(&d) {
        rec.verdict = Verdict::Fail;
        rec.detail = "expected containments ‖R‖ ⊆ D ⊆ ⋂R failed".into();
        return Ok(finish(rec, started));
    }
    let b = quotient_structure(&d, &norm)?;
    let a = quotient_structure(&meet, &norm)?;
    let relative = quotient_structure(&meet, &d)?;
    rec.quotient = Some(QuotientDescriptor::from_group_quotient(&b));
    let exponent_ok = b.exponent == BigInt::from(1) || b.exponent == BigInt::from(2);
    rec.verdict = if n == 3 {
        if exponent_ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    } else {
        Verdict::Pass
    };
    rec.detail = format!(
        "A = (⋂R)/‖R‖ has order {}, exponent {}; B = D/‖R‖ has order {}, exponent {}; A/B has order {}",
        a.order, a.exponent, b.order, b.exponent, relative.order,
    );
    Ok(finish(rec, started))
}

/// Assignment of the three abstract generators to elements of a finite
/// target group.
#[derive(Clone, Debug)]
pub struct QuotientHom {
    pub target: Arc<FiniteGroup>,
    /// Images of a, b, c.
    pub images: [usize; 3],
}

impl QuotientHom {
    /// Do the images generate the whole target?
    pub fn generates_target(&self) -> bool {
        crate::group::generated_subgroup(&self.target, &self.images).order()
            == self.target.order()
    }
}

/// Probes the free-group example through a finite quotient: the images of
/// `R = ⟨a², c⟩`, `S = ⟨a, bc⁻¹⟩`, `T = ⟨a, b⟩` (normal closures in the
/// target) feed the exponent-2 check. A nontrivial quotient is evidence
/// of torsion surviving the quotient, never a refutation.
pub fn probe_free_example(
    ctx: &GroupContext,
    hom: &QuotientHom,
) -> Result<VerificationRecord, VerifyError> {
    let g = &hom.target;
    let [a, b, c] = hom.images;
    let r = normal_closure(g, &[g.mul(a, a), c]);
    let s = normal_closure(g, &[a, g.mul(b, g.inv(c))]);
    let t = normal_closure(g, &[a, b]);
    let named = |name: &str, gens: Vec<String>, sub: Subgroup| NamedSubgroup::new(name, gens, sub);
    let label = |x: usize| g.element_label(x);
    let r = named("R", vec![format!("{}^2", label(a)), label(c)], r);
    let s = named("S", vec![label(a), format!("{} {}^-1", label(b), label(c))], s);
    let t = named("T", vec![label(a), label(b)], t);
    let mut rec = check_exponent2(ctx, &r, &s, &t)?;
    rec.check = "probe-free".into();
    let gen_note = if hom.generates_target() {
        "images generate the target"
    } else {
        "warning: images do not generate the target"
    };
    rec.detail = format!(
        "a↦{}, b↦{}, c↦{}; {}; {}",
        label(a),
        label(b),
        label(c),
        gen_note,
        rec.detail
    );
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus_ctx(name: &str) -> (GroupContext, Vec<EnumeratedSubgroup>) {
        let entry = builtin_corpus().into_iter().find(|e| e.name == name).unwrap();
        let subs = normal_subgroups(&entry.group, 2).unwrap();
        let ctx = GroupContext::new(entry.group).unwrap();
        (ctx, subs)
    }

    fn named(e: &EnumeratedSubgroup) -> NamedSubgroup {
        NamedSubgroup::new(e.name.clone(), e.generators.clone(), e.subgroup.clone())
    }

    #[test]
    fn exp2_trivial_inputs_pass() {
        let (ctx, _) = corpus_ctx("S3");
        let t = NamedSubgroup::new("1", vec![], Subgroup::trivial(ctx.group().clone()));
        let rec = check_exponent2(&ctx, &t, &t, &t).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
        assert_eq!(rec.d_order, Some(1));
    }

    #[test]
    fn exp2_s3_all_a3() {
        let (ctx, subs) = corpus_ctx("S3");
        let a3 = subs.iter().find(|s| s.subgroup.order() == 3).unwrap();
        let rec = check_exponent2(&ctx, &named(a3), &named(a3), &named(a3)).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
        let q = rec.quotient.unwrap();
        match q.exponent {
            ExponentValue::Finite(e) => assert!(e == 1 || e == 2),
            _ => panic!("finite quotient expected"),
        }
    }

    #[test]
    fn exp2_q8_standard_triple() {
        let (ctx, subs) = corpus_ctx("Q8");
        let fours: Vec<_> = subs.iter().filter(|s| s.subgroup.order() == 4).collect();
        assert_eq!(fours.len(), 3);
        let rec =
            check_exponent2(&ctx, &named(fours[0]), &named(fours[1]), &named(fours[2])).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
        // ‖R,S,T‖ is trivial here, so the quotient is D itself and must be
        // elementary abelian 2.
        assert_eq!(rec.norm_order, Some(1));
        let q = rec.quotient.unwrap();
        assert!(q.invariant_factors.iter().all(|&f| f == 2));
    }

    #[test]
    fn bd_examples() {
        let (ctx, subs) = corpus_ctx("S3");
        let trivial = named(subs.iter().find(|s| s.subgroup.order() == 1).unwrap());
        let a3 = named(subs.iter().find(|s| s.subgroup.order() == 3).unwrap());
        let full = named(subs.iter().find(|s| s.subgroup.order() == 6).unwrap());
        for (r, s) in [(&trivial, &a3), (&a3, &full), (&full, &full)] {
            let rec = check_bd(&ctx, r, s).unwrap();
            assert_eq!(rec.verdict, Verdict::Pass, "{:?}", rec.detail);
        }
        // R = A₃, S = S₃ gives both sides equal to A₃.
        let rec = check_bd(&ctx, &a3, &full).unwrap();
        assert_eq!(rec.d_order, Some(3));
    }

    #[test]
    fn bd_on_commuting_factors_of_v4() {
        let (ctx, subs) = corpus_ctx("C2xC2");
        let twos: Vec<_> = subs.iter().filter(|s| s.subgroup.order() == 2).collect();
        let rec = check_bd(&ctx, &named(twos[0]), &named(twos[1])).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
        assert_eq!(rec.d_order, Some(1));
        assert_eq!(rec.norm_order, Some(1));
    }

    #[test]
    fn modg_examples() {
        let (ctx, subs) = corpus_ctx("S3");
        let trivial = named(subs.iter().find(|s| s.subgroup.order() == 1).unwrap());
        let a3 = named(subs.iter().find(|s| s.subgroup.order() == 3).unwrap());
        let full = named(subs.iter().find(|s| s.subgroup.order() == 6).unwrap());
        // T trivial reduces to bd.
        let rec = check_modg(&ctx, &a3, &full, &trivial).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
        // R = S = T = G.
        let rec = check_modg(&ctx, &full, &full, &full).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass, "{}", rec.detail);
        // all trivial.
        let rec = check_modg(&ctx, &trivial, &trivial, &trivial).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
    }

    #[test]
    fn inclusion_small_arities() {
        let (ctx, subs) = corpus_ctx("D4");
        let all: Vec<NamedSubgroup> = subs.iter().map(named).collect();
        let full = all.last().unwrap().clone();
        let rec = check_inclusion_n(&ctx, &[all[0].clone(), full.clone()]).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
        let rec =
            check_inclusion_n(&ctx, &[full.clone(), full.clone(), full.clone(), full.clone()])
                .unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
        assert!(check_inclusion_n(&ctx, &[full.clone()]).is_err());
    }

    #[test]
    fn generalized_quotients() {
        let (ctx, subs) = corpus_ctx("Q8");
        // all Kᵢ = G: the abelianization.
        let full = subs.last().unwrap().subgroup.clone();
        let q = generalized_quotient(&[full.clone(), full.clone(), full.clone()]).unwrap();
        assert_eq!(q.order, 4);
        assert!(q.abelian);
        // all trivial.
        let t = Subgroup::trivial(ctx.group().clone());
        let q = generalized_quotient(&[t.clone(), t.clone()]).unwrap();
        assert_eq!(q.order, 1);
        // the ⟨i⟩,⟨j⟩,⟨k⟩ triple: intersection is the center, norm trivial.
        let fours: Vec<Subgroup> = subs
            .iter()
            .filter(|s| s.subgroup.order() == 4)
            .map(|s| s.subgroup.clone())
            .collect();
        let q = generalized_quotient(&fours).unwrap();
        assert_eq!(q.order, 2);
        assert_eq!(q.invariant_factors, Some(vec![BigInt::from(2)]));
    }

    #[test]
    fn generalized_quotient_two_subgroups_matches_direct() {
        let (_, subs) = corpus_ctx("D4");
        for a in &subs {
            for b in &subs {
                let q = generalized_quotient(&[a.subgroup.clone(), b.subgroup.clone()]).unwrap();
                let meet = a.subgroup.intersect(&b.subgroup).unwrap();
                let norm = commutator_subgroup(&a.subgroup, &b.subgroup).unwrap();
                let direct = quotient_structure(&meet, &norm).unwrap();
                assert_eq!(q, direct);
            }
        }
    }

    #[test]
    fn generalized_ideal_quotient_examples() {
        let (ctx, _) = corpus_ctx("C2");
        let ring = ctx.ring();
        let delta = augmentation_ideal(ring, &Subgroup::full(ctx.group().clone())).unwrap();
        let q = generalized_ideal_quotient(&[delta.clone(), delta.clone(), delta.clone()])
            .unwrap();
        assert_eq!(q.invariant_factors, vec![BigInt::from(2)]);
        let z = Ideal::zero(ring.clone());
        let q = generalized_ideal_quotient(&[z.clone(), z.clone()]).unwrap();
        assert!(q.is_trivial());
        let q = generalized_ideal_quotient(&[delta, z]).unwrap();
        assert!(q.is_trivial());
    }

    #[test]
    fn kernel_of_dimension_map_q8() {
        let (ctx, subs) = corpus_ctx("Q8");
        let fours: Vec<NamedSubgroup> = subs
            .iter()
            .filter(|s| s.subgroup.order() == 4)
            .map(named)
            .collect();
        let rec = kernel_of_dimension_map(&ctx, &fours).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
        assert!(rec.detail.contains("A = (⋂R)/‖R‖ has order 2"), "{}", rec.detail);
    }

    #[test]
    fn probe_free_on_c2() {
        let (ctx, _) = corpus_ctx("C2");
        // a ↦ t, b, c ↦ 1: R̄ = 1, S̄ = T̄ = C₂.
        let hom = QuotientHom {
            target: ctx.group().clone(),
            images: [1, 0, 0],
        };
        let rec = probe_free_example(&ctx, &hom).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);

        // everything trivial
        let hom = QuotientHom {
            target: ctx.group().clone(),
            images: [0, 0, 0],
        };
        let rec = probe_free_example(&ctx, &hom).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
        assert_eq!(rec.d_order, Some(1));
        assert!(rec.detail.contains("warning"));
    }
}
