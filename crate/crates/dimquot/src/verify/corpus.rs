//! The built-in group corpus and normal-subgroup enumeration.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::group::{generated_subgroup, normal_closure, FiniteGroup, Permutation, Subgroup};

use super::VerifyError;

/// A corpus member: a named group plus its enumerated normal subgroups
/// (each with a printable generating hint).
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub group: Arc<FiniteGroup>,
}

fn cyc(cycles: &[&[usize]], min_degree: usize) -> Permutation {
    let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(&cs, min_degree).expect("builtin cycles are well formed")
}

fn perm_group(name: &str, gens: &[(&str, Permutation)]) -> CorpusEntry {
    let named: Vec<(String, Permutation)> = gens
        .iter()
        .map(|(n, p)| (n.to_string(), p.clone()))
        .collect();
    let group = FiniteGroup::from_permutations(&named)
        .expect("builtin corpus groups close under the cap")
        .with_name(name);
    CorpusEntry {
        name: name.to_string(),
        group,
    }
}

/// The Heisenberg group of order 27 (upper unitriangular 3×3 over 𝔽₃) as
/// permutations of its 27 elements `(a, b, c)` under left multiplication
/// by the two standard generators.
fn heisenberg27() -> CorpusEntry {
    let idx = |a: usize, b: usize, c: usize| a * 9 + b * 3 + c + 1;
    let mut x_images = vec![0usize; 27];
    let mut y_images = vec![0usize; 27];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let p = idx(a, b, c) - 1;
                // (1,0,0)·(a,b,c) = (a+1, b, c+b)
                x_images[p] = idx((a + 1) % 3, b, (c + b) % 3);
                // (0,1,0)·(a,b,c) = (a, b+1, c)
                y_images[p] = idx(a, (b + 1) % 3, c);
            }
        }
    }
    let to_perm = |im: Vec<usize>| {
        Permutation::from_images(im.into_iter().map(|v| v - 1).collect())
            .expect("left multiplication is a bijection")
    };
    perm_group(
        "Heis27",
        &[("x", to_perm(x_images)), ("y", to_perm(y_images))],
    )
}

/// The built-in corpus: C₂..C₁₆, C₂×C₂, C₂×C₄, elementary abelian 2³ and
/// 3², S₃, S₄, A₄, D₄, D₅, D₆, Q₈, and the Heisenberg group of order 27.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 2..=16usize {
        let points: Vec<usize> = (1..=n).collect();
        out.push(perm_group(&format!("C{n}"), &[("a", cyc(&[&points], 0))]));
    }
    out.push(perm_group(
        "C2xC2",
        &[("a", cyc(&[&[1, 2]], 4)), ("b", cyc(&[&[3, 4]], 4))],
    ));
    out.push(perm_group(
        "C2xC4",
        &[("a", cyc(&[&[1, 2]], 6)), ("b", cyc(&[&[3, 4, 5, 6]], 6))],
    ));
    out.push(perm_group(
        "E8",
        &[
            ("a", cyc(&[&[1, 2]], 6)),
            ("b", cyc(&[&[3, 4]], 6)),
            ("c", cyc(&[&[5, 6]], 6)),
        ],
    ));
    out.push(perm_group(
        "E9",
        &[("a", cyc(&[&[1, 2, 3]], 6)), ("b", cyc(&[&[4, 5, 6]], 6))],
    ));
    out.push(perm_group(
        "S3",
        &[("a", cyc(&[&[1, 2, 3]], 0)), ("b", cyc(&[&[1, 2]], 3))],
    ));
    out.push(perm_group(
        "S4",
        &[("a", cyc(&[&[1, 2, 3, 4]], 0)), ("b", cyc(&[&[1, 2]], 4))],
    ));
    out.push(perm_group(
        "A4",
        &[("a", cyc(&[&[1, 2, 3]], 4)), ("b", cyc(&[&[2, 3, 4]], 4))],
    ));
    out.push(perm_group(
        "D4",
        &[("a", cyc(&[&[1, 2, 3, 4]], 0)), ("b", cyc(&[&[1, 3]], 4))],
    ));
    out.push(perm_group(
        "D5",
        &[
            ("a", cyc(&[&[1, 2, 3, 4, 5]], 0)),
            ("b", cyc(&[&[2, 5], &[3, 4]], 5)),
        ],
    ));
    out.push(perm_group(
        "D6",
        &[
            ("a", cyc(&[&[1, 2, 3, 4, 5, 6]], 0)),
            ("b", cyc(&[&[2, 6], &[3, 5]], 6)),
        ],
    ));
    out.push(perm_group(
        "Q8",
        &[
            ("i", cyc(&[&[1, 3, 2, 4], &[5, 7, 6, 8]], 0)),
            ("j", cyc(&[&[1, 5, 2, 6], &[3, 8, 4, 7]], 0)),
        ],
    ));
    out.push(heisenberg27());
    out
}

/// A named normal subgroup as enumerated from a group.
#[derive(Clone, Debug)]
pub struct EnumeratedSubgroup {
    pub name: String,
    pub generators: Vec<String>,
    pub subgroup: Subgroup,
}

/// Enumerates normal subgroups: exhaustively (as the normal members of
/// the full subgroup lattice) for groups of order ≤ 16, and as normal
/// closures of subsets of conjugacy-class representatives (subset size ≤
/// `closure_subset_cap`) above that. Deterministic order: by order, then
/// by member list.
pub fn normal_subgroups(
    g: &Arc<FiniteGroup>,
    closure_subset_cap: usize,
) -> Result<Vec<EnumeratedSubgroup>, VerifyError> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    if g.order() <= 16 {
        for sub in all_subgroups(g) {
            if sub.is_normal() {
                found.insert(sub.members().to_vec());
            }
        }
    } else {
        let reps: Vec<usize> = g
            .conjugacy_classes()
            .into_iter()
            .map(|c| c[0])
            .filter(|&x| x != g.identity())
            .collect();
        found.insert(vec![g.identity()]);
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, vec![])];
        while let Some((start, seeds)) = stack.pop() {
            if !seeds.is_empty() {
                found.insert(normal_closure(g, &seeds).members().to_vec());
            }
            if seeds.len() < closure_subset_cap {
                for (offset, &r) in reps[start..].iter().enumerate() {
                    let mut next = seeds.clone();
                    next.push(r);
                    stack.push((start + offset + 1, next));
                }
            }
        }
    }
    let mut sorted: Vec<Vec<usize>> = found.into_iter().collect();
    sorted.sort_by_key(|m| (m.len(), m.clone()));
    sorted
        .into_iter()
        .enumerate()
        .map(|(i, members)| {
            let set: BTreeSet<usize> = members.iter().copied().collect();
            let subgroup = Subgroup::from_members(g.clone(), set)
                .expect("enumerated member sets are subgroups");
            let generators = generating_hint(g, &subgroup);
            Ok(EnumeratedSubgroup {
                name: format!("N{i}"),
                generators,
                subgroup,
            })
        })
        .collect()
}

/// Small generating set found greedily; used only for report labels.
fn generating_hint(g: &Arc<FiniteGroup>, s: &Subgroup) -> Vec<String> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = generated_subgroup(g, &gens);
    for &x in s.members() {
        if span.order() == s.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = generated_subgroup(g, &gens);
        }
    }
    gens.iter().map(|&x| g.element_label(x)).collect()
}

/// Every subgroup of a small group: breadth-first extension of known
/// subgroups by single elements.
pub fn all_subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = vec![g.identity()];
    seen.insert(trivial.clone());
    let mut queue = vec![trivial];
    while let Some(members) = queue.pop() {
        for x in 0..g.order() {
            if members.binary_search(&x).is_ok() {
                continue;
            }
            let mut seeds = members.clone();
            seeds.push(x);
            let bigger = generated_subgroup(g, &seeds);
            let key = bigger.members().to_vec();
            if seen.insert(key.clone()) {
                queue.push(key);
            }
        }
    }
    seen.into_iter()
        .map(|members| {
            let set: BTreeSet<usize> = members.into_iter().collect();
            Subgroup::from_members(g.clone(), set).expect("closures are subgroups")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn by_name(name: &str) -> Arc<FiniteGroup> {
        builtin_corpus()
            .into_iter()
            .find(|e| e.name == name)
            .unwrap()
            .group
    }

    #[test]
    fn corpus_orders_are_correct() {
        let expected = [
            ("C2", 2),
            ("C16", 16),
            ("C2xC2", 4),
            ("C2xC4", 8),
            ("E8", 8),
            ("E9", 9),
            ("S3", 6),
            ("S4", 24),
            ("A4", 12),
            ("D4", 8),
            ("D5", 10),
            ("D6", 12),
            ("Q8", 8),
            ("Heis27", 27),
        ];
        for (name, order) in expected {
            assert_eq!(by_name(name).order(), order, "{name}");
        }
        assert_eq!(builtin_corpus().len(), 15 + 12);
    }

    #[test]
    fn heisenberg_is_nonabelian_of_exponent_three() {
        let h = by_name("Heis27");
        assert!(!h.is_abelian());
        assert_eq!(h.exponent(), 3);
    }

    #[test]
    fn q8_has_one_minimal_normal_subgroup() {
        let q8 = by_name("Q8");
        let subs = normal_subgroups(&q8, 2).unwrap();
        // 1, Z, ⟨i⟩, ⟨j⟩, ⟨k⟩, Q₈
        assert_eq!(subs.len(), 6);
        let orders: Vec<usize> = subs.iter().map(|s| s.subgroup.order()).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn s4_normal_subgroups() {
        let s4 = by_name("S4");
        let subs = normal_subgroups(&s4, 2).unwrap();
        // 1, V₄, A₄, S₄
        let orders: Vec<usize> = subs.iter().map(|s| s.subgroup.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn full_enumeration_for_small_groups() {
        let e8 = by_name("E8");
        let subs = normal_subgroups(&e8, 2).unwrap();
        // Elementary abelian of rank 3: 1 + 7 + 7 + 1 subgroups, all normal.
        assert_eq!(subs.len(), 16);
        let c6 = by_name("C6");
        let subs = normal_subgroups(&c6, 2).unwrap();
        assert_eq!(subs.len(), 4);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let d4 = by_name("D4");
        let a = normal_subgroups(&d4, 2).unwrap();
        let b = normal_subgroups(&d4, 2).unwrap();
        let am: Vec<_> = a.iter().map(|s| s.subgroup.members().to_vec()).collect();
        let bm: Vec<_> = b.iter().map(|s| s.subgroup.members().to_vec()).collect();
        assert_eq!(am, bm);
    }
}
