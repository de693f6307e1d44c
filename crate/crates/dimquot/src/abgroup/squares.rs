//! Pushout and pullback detection for commuting squares of f.g. abelian
//! groups. Each predicate evaluates four equivalent criteria — the
//! comparison map against the categorical (co)limit, exactness of the
//! associated three-term sequence, and the two kernel/cokernel
//! characterizations — and reports them individually so their agreement
//! can be checked empirically.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactlinalg::{IntMatrix, Lattice};

use super::presented::{
    cokernel_object, induced_on_kernels, kernel_object, Presented, PresentedHom,
};
use super::{AbGroupError, AbHom, FgAbelianGroup};

/// A commuting square
///
/// ```text
///        f
///    A ----> B
///    |       |
///  g |       | g′
///    v       v
///    C ----> D
///        f′
/// ```
#[derive(Clone, Debug)]
pub struct AbSquare {
    f: AbHom,
    g: AbHom,
    g_prime: AbHom,
    f_prime: AbHom,
}

impl AbSquare {
    /// Builds the square and verifies `g′∘f = f′∘g` on generators.
    pub fn new(
        f: AbHom,
        g: AbHom,
        g_prime: AbHom,
        f_prime: AbHom,
    ) -> Result<Self, AbGroupError> {
        if f.source() != g.source()
            || f.target() != g_prime.source()
            || g.target() != f_prime.source()
            || g_prime.target() != f_prime.target()
        {
            return Err(AbGroupError::NonCommutingSquare);
        }
        let via_b = f.matrix().mul(g_prime.matrix())?;
        let via_c = g.matrix().mul(f_prime.matrix())?;
        let d = g_prime.target();
        for i in 0..via_b.rows() {
            if d.normalize_coords(via_b.row(i)) != d.normalize_coords(via_c.row(i)) {
                return Err(AbGroupError::NonCommutingSquare);
            }
        }
        Ok(AbSquare {
            f,
            g,
            g_prime,
            f_prime,
        })
    }

    pub fn corner_a(&self) -> &FgAbelianGroup {
        self.f.source()
    }
    pub fn corner_b(&self) -> &FgAbelianGroup {
        self.f.target()
    }
    pub fn corner_c(&self) -> &FgAbelianGroup {
        self.g.target()
    }
    pub fn corner_d(&self) -> &FgAbelianGroup {
        self.g_prime.target()
    }
}

/// One named criterion outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub name: &'static str,
    pub holds: bool,
}

/// Per-criterion report of a pushout or pullback test.
#[derive(Clone, Debug)]
pub struct SquareReport {
    pub criteria: Vec<CriterionOutcome>,
    pub verdict: bool,
}

impl SquareReport {
    /// All criteria produced the same answer (they are equivalent, so
    /// disagreement would expose a computation bug).
    pub fn criteria_agree(&self) -> bool {
        self.criteria.windows(2).all(|w| w[0].holds == w[1].holds)
    }
}

struct Analysis {
    composite_zero: bool,
    map1_mono: bool,
    map2_epi: bool,
    middle_exact: bool,
    pushout_comparison_iso: bool,
    pullback_comparison_iso: bool,
    /// g̃ : Ker f → Ker f′
    g_ker_epi: bool,
    g_ker_iso: bool,
    /// g̃′ : Coker f → Coker f′
    g_cok_iso: bool,
    g_cok_mono: bool,
    /// f̃ : Ker g → Ker g′
    f_ker_epi: bool,
    f_ker_iso: bool,
    /// f̃′ : Coker g → Coker g′
    f_cok_iso: bool,
    f_cok_mono: bool,
}

fn analyze(s: &AbSquare) -> Result<Analysis, AbGroupError> {
    let pa = s.corner_a().presented();
    let pb = s.corner_b().presented();
    let pc = s.corner_c().presented();
    let pd = s.corner_d().presented();

    // B ⊕ C with block-diagonal relations.
    let (rb, rc) = (pb.rank, pc.rank);
    let mut bc_rels: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..pb.rels.basis().rows() {
        let mut row = pb.rels.basis().row_vec(i);
        row.extend(vec![BigInt::zero(); rc]);
        bc_rels.push(row);
    }
    for i in 0..pc.rels.basis().rows() {
        let mut row = vec![BigInt::zero(); rb];
        row.extend(pc.rels.basis().row_vec(i));
        bc_rels.push(row);
    }
    let pbc = Presented::from_relation_rows(rb + rc, &bc_rels)?;

    // map1 : A → B⊕C, a ↦ (f(a), -g(a));  map2 : B⊕C → D, (b,c) ↦ g′(b)+f′(c).
    let mut map1 = IntMatrix::zero(pa.rank, rb + rc);
    for i in 0..pa.rank {
        for j in 0..rb {
            map1[(i, j)] = s.f.matrix()[(i, j)].clone();
        }
        for j in 0..rc {
            map1[(i, rb + j)] = -s.g.matrix()[(i, j)].clone();
        }
    }
    let map2 = s.g_prime.matrix().stack(s.f_prime.matrix())?;
    let hom1 = PresentedHom {
        matrix: map1.clone(),
    };
    let hom2 = PresentedHom {
        matrix: map2.clone(),
    };
    debug_assert!(hom1.well_defined(&pa, &pbc));
    debug_assert!(hom2.well_defined(&pbc, &pd));

    // Exactness pieces.
    let composite = map1.mul(&map2)?;
    let composite_zero = (0..composite.rows())
        .all(|i| pd.rels.contains(composite.row(i)).expect("width checked"));
    let map1_mono = hom1.is_mono(&pa, &pbc);
    let map2_epi = hom2.is_epi(&pd);
    let kernel_of_map2 = hom2.preimage_of_relations(&pd);
    let image_of_map1 = Lattice::from_matrix(&map1).sum(&pbc.rels)?;
    let middle_exact = kernel_of_map2 == image_of_map1;

    // Comparison with the categorical pushout: Coker(map1) → D must be iso.
    let pushout_obj = cokernel_object(&hom1, &pbc);
    let pushout_comparison_iso =
        composite_zero && hom2.is_iso(&pushout_obj, &pd);

    // Comparison with the categorical pullback: A → Ker(map2) must be iso.
    let (pullback_obj, pullback_lat) = kernel_object(&hom2, &pbc, &pd);
    let pullback_comparison_iso = if composite_zero {
        let mut rows = Vec::with_capacity(pa.rank);
        let mut ok = true;
        for i in 0..pa.rank {
            match pullback_lat.coordinates_of(map1.row(i))? {
                Some(c) => rows.push(c),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        ok && {
            let cmp = PresentedHom {
                matrix: IntMatrix::from_row_vectors(rows, pullback_lat.rank())?,
            };
            cmp.is_iso(&pa, &pullback_obj)
        }
    } else {
        false
    };

    // Induced maps on kernels and cokernels of the horizontal arrows.
    let hom_f = PresentedHom {
        matrix: s.f.matrix().clone(),
    };
    let hom_fp = PresentedHom {
        matrix: s.f_prime.matrix().clone(),
    };
    let hom_g = PresentedHom {
        matrix: s.g.matrix().clone(),
    };
    let hom_gp = PresentedHom {
        matrix: s.g_prime.matrix().clone(),
    };

    let (ker_f, ker_f_lat) = kernel_object(&hom_f, &pa, &pb);
    let (ker_fp, ker_fp_lat) = kernel_object(&hom_fp, &pc, &pd);
    let g_tilde = induced_on_kernels(s.g.matrix(), &ker_f_lat, &ker_fp_lat);
    let g_ker_epi = g_tilde.is_epi(&ker_fp);
    let g_ker_iso = g_ker_epi && g_tilde.is_mono(&ker_f, &ker_fp);

    let cok_f = cokernel_object(&hom_f, &pb);
    let cok_fp = cokernel_object(&hom_fp, &pd);
    let g_cok = PresentedHom {
        matrix: s.g_prime.matrix().clone(),
    };
    let g_cok_mono = g_cok.is_mono(&cok_f, &cok_fp);
    let g_cok_iso = g_cok_mono && g_cok.is_epi(&cok_fp);

    let (ker_g, ker_g_lat) = kernel_object(&hom_g, &pa, &pc);
    let (ker_gp, ker_gp_lat) = kernel_object(&hom_gp, &pb, &pd);
    let f_tilde = induced_on_kernels(s.f.matrix(), &ker_g_lat, &ker_gp_lat);
    let f_ker_epi = f_tilde.is_epi(&ker_gp);
    let f_ker_iso = f_ker_epi && f_tilde.is_mono(&ker_g, &ker_gp);

    let cok_g = cokernel_object(&hom_g, &pc);
    let cok_gp = cokernel_object(&hom_gp, &pd);
    let f_cok = PresentedHom {
        matrix: s.f_prime.matrix().clone(),
    };
    let f_cok_mono = f_cok.is_mono(&cok_g, &cok_gp);
    let f_cok_iso = f_cok_mono && f_cok.is_epi(&cok_gp);

    Ok(Analysis {
        composite_zero,
        map1_mono,
        map2_epi,
        middle_exact,
        pushout_comparison_iso,
        pullback_comparison_iso,
        g_ker_epi,
        g_ker_iso,
        g_cok_iso,
        g_cok_mono,
        f_ker_epi,
        f_ker_iso,
        f_cok_iso,
        f_cok_mono,
    })
}

/// Is the square a pushout? Evaluates the comparison-map criterion, the
/// exactness of `A → B⊕C → D → 0`, and both kernel/cokernel
/// characterizations.
pub fn is_pushout(s: &AbSquare) -> Result<SquareReport, AbGroupError> {
    let an = analyze(s)?;
    let criteria = vec![
        CriterionOutcome {
            name: "comparison map Coker(A → B⊕C) → D is an isomorphism",
            holds: an.pushout_comparison_iso,
        },
        CriterionOutcome {
            name: "A → B⊕C → D → 0 is exact",
            holds: an.composite_zero && an.map2_epi && an.middle_exact,
        },
        CriterionOutcome {
            name: "Coker f → Coker f′ iso and Ker f → Ker f′ epi",
            holds: an.g_cok_iso && an.g_ker_epi,
        },
        CriterionOutcome {
            name: "Coker g → Coker g′ iso and Ker g → Ker g′ epi",
            holds: an.f_cok_iso && an.f_ker_epi,
        },
    ];
    let verdict = criteria[0].holds;
    Ok(SquareReport { criteria, verdict })
}

/// Is the square a pullback? Same structure as `is_pushout` with the dual
/// criteria.
pub fn is_pullback(s: &AbSquare) -> Result<SquareReport, AbGroupError> {
    let an = analyze(s)?;
    let criteria = vec![
        CriterionOutcome {
            name: "comparison map A → Ker(B⊕C → D) is an isomorphism",
            holds: an.pullback_comparison_iso,
        },
        CriterionOutcome {
            name: "0 → A → B⊕C → D is exact",
            holds: an.composite_zero && an.map1_mono && an.middle_exact,
        },
        CriterionOutcome {
            name: "Ker f → Ker f′ iso and Coker f → Coker f′ mono",
            holds: an.g_ker_iso && an.g_cok_mono,
        },
        CriterionOutcome {
            name: "Ker g → Ker g′ iso and Coker g → Coker g′ mono",
            holds: an.f_ker_iso && an.f_cok_mono,
        },
    ];
    let verdict = criteria[0].holds;
    Ok(SquareReport { criteria, verdict })
}
