//! Internal workhorse: abelian groups presented as `ℤ^rank / L` for a
//! relation lattice `L`, with homomorphisms as integer matrices on the
//! ambient free groups. Kernels, cokernels, image tests and the reduction
//! to canonical invariant-factor form all happen here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactlinalg::{
    left_kernel, quotient_invariants, snf_with_right_transform, IntMatrix, Lattice,
    QuotientInvariants,
};

use super::{AbGroupError, FgAbelianGroup};

/// `ℤ^rank / rels`.
#[derive(Clone, Debug)]
pub(crate) struct Presented {
    pub(crate) rank: usize,
    pub(crate) rels: Lattice,
}

impl Presented {
    pub(crate) fn from_relation_rows(
        rank: usize,
        rows: &[Vec<BigInt>],
    ) -> Result<Self, AbGroupError> {
        Ok(Presented {
            rank,
            rels: Lattice::from_generators(rows, rank)?,
        })
    }

    pub(crate) fn from_relation_lattice(rels: Lattice) -> Self {
        Presented {
            rank: rels.ambient_rank(),
            rels,
        }
    }

    /// Canonical presentation of a group in invariant-factor coordinates:
    /// relations `dᵢ·eᵢ` on the torsion coordinates.
    pub(crate) fn from_group(g: &FgAbelianGroup) -> Self {
        let k = g.coord_count();
        let mut rows = Vec::with_capacity(g.invariant_factors().len());
        for (i, d) in g.invariant_factors().iter().enumerate() {
            let mut row = vec![BigInt::zero(); k];
            row[i] = d.clone();
            rows.push(row);
        }
        Presented {
            rank: k,
            rels: Lattice::from_generators(&rows, k).expect("rows built to width"),
        }
    }

    pub(crate) fn quotient_structure(&self) -> QuotientInvariants {
        quotient_invariants(&self.rels, &Lattice::full(self.rank))
            .expect("relations live in the ambient lattice")
    }
}

/// A homomorphism `ℤ^src.rank / L_src → ℤ^dst.rank / L_dst` given by a
/// matrix on the ambient free groups that carries `L_src` into `L_dst`.
#[derive(Clone, Debug)]
pub(crate) struct PresentedHom {
    pub(crate) matrix: IntMatrix,
}

impl PresentedHom {
    /// Checks the defining property `L_src · M ⊆ L_dst`.
    pub(crate) fn well_defined(&self, src: &Presented, dst: &Presented) -> bool {
        for i in 0..src.rels.basis().rows() {
            let img = self
                .matrix
                .apply_row(src.rels.basis().row(i))
                .expect("relation width matches matrix height");
            if !dst.rels.contains(&img).expect("width checked") {
                return false;
            }
        }
        true
    }

    /// Lattice `{x : x·M ∈ L_dst}` of ambient preimages of the target
    /// relations; contains `L_src` whenever the hom is well defined.
    pub(crate) fn preimage_of_relations(&self, dst: &Presented) -> Lattice {
        let src_rank = self.matrix.rows();
        if dst.rels.rank() == 0 {
            // Target is free: the preimage is the kernel of the matrix.
            let k = left_kernel(&self.matrix);
            return Lattice::from_matrix(&k);
        }
        let stacked = self
            .matrix
            .stack(dst.rels.basis())
            .expect("same target width");
        let kernel = left_kernel(&stacked);
        let mut gens = Vec::with_capacity(kernel.rows());
        for i in 0..kernel.rows() {
            gens.push(kernel.row(i)[..src_rank].to_vec());
        }
        Lattice::from_generators(&gens, src_rank).expect("projection keeps width")
    }

    pub(crate) fn is_epi(&self, dst: &Presented) -> bool {
        let image = Lattice::from_matrix(&self.matrix);
        let total = image.sum(&dst.rels).expect("same ambient");
        total == Lattice::full(dst.rank)
    }

    pub(crate) fn is_mono(&self, src: &Presented, dst: &Presented) -> bool {
        self.preimage_of_relations(dst) == src.rels
    }

    pub(crate) fn is_iso(&self, src: &Presented, dst: &Presented) -> bool {
        self.is_epi(dst) && self.is_mono(src, dst)
    }
}

/// Kernel of a presented hom as a presented group, together with its
/// ambient preimage lattice (basis rows in `ℤ^src.rank` give the inclusion
/// into the source).
pub(crate) fn kernel_object(
    hom: &PresentedHom,
    src: &Presented,
    dst: &Presented,
) -> (Presented, Lattice) {
    let pre = hom.preimage_of_relations(dst);
    let k = pre.rank();
    // Express the source relations in the preimage basis; they embed since
    // L_src ⊆ pre.
    let mut rel_rows = Vec::with_capacity(src.rels.rank());
    for i in 0..src.rels.basis().rows() {
        let coords = pre
            .coordinates_of(src.rels.basis().row(i))
            .expect("width ok")
            .expect("source relations lie in the preimage lattice");
        rel_rows.push(coords);
    }
    let rels = Lattice::from_generators(&rel_rows, k).expect("coords have kernel rank");
    (Presented { rank: k, rels }, pre)
}

/// Cokernel of a presented hom: same ambient as the target, relations
/// enlarged by the image.
pub(crate) fn cokernel_object(hom: &PresentedHom, dst: &Presented) -> Presented {
    let image = Lattice::from_matrix(&hom.matrix);
    Presented {
        rank: dst.rank,
        rels: dst.rels.sum(&image).expect("same ambient"),
    }
}

/// The map induced by `through` between two kernel objects: each basis row
/// of the source kernel lattice is pushed through and rewritten in the
/// target kernel's basis. Panics if the image does not land there (callers
/// ensure commutativity first).
pub(crate) fn induced_on_kernels(
    through: &IntMatrix,
    src_kernel: &Lattice,
    dst_kernel: &Lattice,
) -> PresentedHom {
    let src_basis = src_kernel.basis();
    let mut rows = Vec::with_capacity(src_basis.rows());
    for i in 0..src_basis.rows() {
        let img = through.apply_row(src_basis.row(i)).expect("widths agree");
        let coords = dst_kernel
            .coordinates_of(&img)
            .expect("width ok")
            .expect("commuting square maps kernels into kernels");
        rows.push(coords);
    }
    PresentedHom {
        matrix: IntMatrix::from_row_vectors(rows, dst_kernel.rank()).expect("kernel rank"),
    }
}

/// The map induced between cokernels is the ambient map itself.
pub(crate) fn induced_on_cokernels(through: &IntMatrix) -> PresentedHom {
    PresentedHom {
        matrix: through.clone(),
    }
}

/// Reduction of a presentation to canonical coordinates: the group, plus
/// projection ℤ^rank → coords and lifts of the canonical generators.
pub(crate) struct CanonicalQuotient {
    group: FgAbelianGroup,
    /// Right transform of the Smith form and its inverse.
    v: IntMatrix,
    v_inv: IntMatrix,
    /// For each kept coordinate: (column in Smith coordinates, modulus;
    /// `None` for free coordinates).
    kept: Vec<(usize, Option<BigInt>)>,
}

impl CanonicalQuotient {
    pub(crate) fn new(p: &Presented) -> Self {
        let rels = p.rels.basis();
        let (diag, v, v_inv) = if rels.rows() == 0 {
            (
                vec![BigInt::zero(); p.rank],
                IntMatrix::identity(p.rank),
                IntMatrix::identity(p.rank),
            )
        } else {
            snf_with_right_transform(rels)
        };
        let one = BigInt::one();
        let mut torsion = Vec::new();
        let mut free_cols = Vec::new();
        for (col, d) in diag.iter().enumerate() {
            if d.is_zero() {
                free_cols.push((col, None));
            } else if *d != one {
                torsion.push((col, d.clone()));
            }
        }
        // Canonical coordinate order: torsion in chain order, then free.
        torsion.sort_by(|a, b| a.1.cmp(&b.1));
        let factors: Vec<BigInt> = torsion.iter().map(|(_, d)| d.clone()).collect();
        let free = free_cols.len();
        let mut kept = Vec::with_capacity(torsion.len() + free);
        kept.extend(torsion.into_iter().map(|(c, d)| (c, Some(d))));
        kept.extend(free_cols);
        let group = FgAbelianGroup::new(free, factors).expect("Smith factors form a chain");
        CanonicalQuotient {
            group,
            v,
            v_inv,
            kept,
        }
    }

    pub(crate) fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    /// Canonical coordinates of the class of an ambient vector.
    pub(crate) fn project(&self, x: &[BigInt]) -> Vec<BigInt> {
        let y = self.v.apply_row(x).expect("rank matches");
        self.kept
            .iter()
            .map(|(col, d)| match d {
                Some(d) => y[*col].mod_floor(d),
                None => y[*col].clone(),
            })
            .collect()
    }

    /// Ambient representative of the `j`-th canonical generator.
    pub(crate) fn lift(&self, j: usize) -> Vec<BigInt> {
        let col = self.kept[j].0;
        self.v_inv.row_vec(col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn canonical_quotient_of_diag() {
        let p = Presented::from_relation_rows(2, &[vec![b(2), b(0)], vec![b(0), b(3)]]).unwrap();
        let cq = CanonicalQuotient::new(&p);
        assert_eq!(cq.group(), &FgAbelianGroup::cyclic(6));
        // project · lift = identity on canonical generators
        for j in 0..cq.group().coord_count() {
            let lifted = cq.lift(j);
            let back = cq.project(&lifted);
            let mut expect = vec![b(0); cq.group().coord_count()];
            expect[j] = b(1);
            assert_eq!(cq.group().normalize_coords(&back), expect);
        }
    }

    #[test]
    fn canonical_quotient_with_free_part() {
        let p = Presented::from_relation_rows(3, &[vec![b(0), b(4), b(0)]]).unwrap();
        let cq = CanonicalQuotient::new(&p);
        assert_eq!(cq.group().free_rank(), 2);
        assert_eq!(cq.group().invariant_factors(), &[b(4)]);
    }

    #[test]
    fn kernel_and_cokernel_of_multiplication_by_two() {
        // ×2 : ℤ → ℤ has kernel 0 and cokernel ℤ/2.
        let z = Presented::from_relation_rows(1, &[]).unwrap();
        let hom = PresentedHom {
            matrix: IntMatrix::from_rows_i64(&[&[2]]),
        };
        assert!(hom.well_defined(&z, &z));
        let (ker, _) = kernel_object(&hom, &z, &z);
        assert!(CanonicalQuotient::new(&ker).group().is_trivial());
        let coker = cokernel_object(&hom, &z);
        assert_eq!(
            CanonicalQuotient::new(&coker).group(),
            &FgAbelianGroup::cyclic(2)
        );
        assert!(hom.is_mono(&z, &z));
        assert!(!hom.is_epi(&z));
    }

    #[test]
    fn projection_to_quotient_is_epi_not_mono() {
        // ℤ → ℤ/4 (identity matrix on ambient ℤ¹).
        let z = Presented::from_relation_rows(1, &[]).unwrap();
        let z4 = Presented::from_relation_rows(1, &[vec![b(4)]]).unwrap();
        let hom = PresentedHom {
            matrix: IntMatrix::identity(1),
        };
        assert!(hom.well_defined(&z, &z4));
        assert!(hom.is_epi(&z4));
        assert!(!hom.is_mono(&z, &z4));
    }
}
