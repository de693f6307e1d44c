//! The Whitehead quadratic functor Γ on finitely generated abelian groups,
//! the natural map `Γ(A) → A⊗A` sending `γ(a) ↦ a⊗a`, its kernel Φ and
//! cokernel Λ².
//!
//! Two independent routes compute Γ:
//!
//! * `ClosedForm` assembles `Γ(ℤ) = ℤ`, `Γ(ℤ/n) = ℤ/gcd(2n, n²)` and
//!   `Γ(X⊕Y) = Γ(X) ⊕ Γ(Y) ⊕ (X⊗Y)` along the invariant-factor
//!   decomposition.
//! * `Presentation` builds the quotient of `ℤ^{|A|}` (one symbol `γ(x)`
//!   per element) by the relation lattice of `γ(0) = 0`, `γ(-x) = γ(x)`
//!   and the third-order relation
//!   `γ(x+y+z) - γ(x+y) - γ(x+z) - γ(y+z) + γ(x) + γ(y) + γ(z) = 0`.
//!
//! The presentation route streams the relation scheme with the third slot
//! restricted to the canonical generators; every full relation row is an
//! integer combination of these, so the spanned lattice is unchanged (see
//! the telescoping identity in `reduced_scheme_spans_all_triples`, which
//! also cross-checks the exhaustive enumeration on small groups). The
//! relation lattice always contains `E·ℤⁿ` for `E = exp(A)·gcd(2, exp(A))`
//! — from `E·γ(x) = 0`, derivable inside the lattice — which keeps all
//! arithmetic bounded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::exactlinalg::modrow::{invariant_factors_mod, ModRowReducer};
use crate::exactlinalg::{left_kernel, IntMatrix, Lattice};

use super::presented::{CanonicalQuotient, Presented};
use super::{tensor, AbGroupError, AbHom, FgAbelianGroup};

/// Construction route for `whitehead_gamma`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GammaMethod {
    /// Element-symbol presentation, reduced by exact linear algebra.
    /// Requires a finite group.
    Presentation,
    /// Additivity formulas on the invariant-factor decomposition.
    ClosedForm,
}

/// Largest group order accepted by the presentation route.
const MAX_PRESENTATION_ORDER: u64 = 4096;

pub fn whitehead_gamma(
    a: &FgAbelianGroup,
    method: GammaMethod,
) -> Result<FgAbelianGroup, AbGroupError> {
    match method {
        GammaMethod::ClosedForm => Ok(gamma_closed(a)),
        GammaMethod::Presentation => {
            let ctx = GammaContext::new(a)?;
            let rows = ctx.relation_hnf_rows();
            let factors = invariant_factors_mod(rows, ctx.order, ctx.modulus);
            Ok(group_from_i64_orders(&factors))
        }
    }
}

/// Exhaustive-presentation oracle: enumerates the third-order relation for
/// every ordered triple of elements. Cubic in the group order, so capped
/// at order 64; used to validate the streamed scheme.
pub fn whitehead_gamma_all_triples(a: &FgAbelianGroup) -> Result<FgAbelianGroup, AbGroupError> {
    let ctx = GammaContext::new(a)?;
    if ctx.order > 64 {
        return Err(AbGroupError::PresentationTooLarge {
            order: ctx.order.to_string(),
        });
    }
    let rows = ctx.all_triples_hnf_rows();
    let factors = invariant_factors_mod(rows, ctx.order, ctx.modulus);
    Ok(group_from_i64_orders(&factors))
}

fn gamma_closed(a: &FgAbelianGroup) -> FgAbelianGroup {
    let f = a.free_rank();
    let ds = a.invariant_factors();
    let mut orders: Vec<BigInt> = Vec::new();
    // Γ(ℤ/d) = ℤ/(d·gcd(2, d))
    for d in ds {
        orders.push(d * d.gcd(&BigInt::from(2)));
    }
    // cross terms ℤ/dᵢ ⊗ ℤ/dⱼ
    for i in 0..ds.len() {
        for j in (i + 1)..ds.len() {
            orders.push(ds[i].gcd(&ds[j]));
        }
    }
    // ℤ^f ⊗ T = T^f
    for d in ds {
        for _ in 0..f {
            orders.push(d.clone());
        }
    }
    // Γ(ℤ^f) = ℤ^{f(f+1)/2}
    FgAbelianGroup::from_cyclic_orders(f * (f + 1) / 2, &orders)
}

/// The natural transformation `Γ(A) → A ⊗ A`, `γ(x) ↦ x⊗x`, as an explicit
/// homomorphism in canonical coordinates. Finite groups only (the Γ side
/// is realized through its presentation).
pub fn whitehead_map(a: &FgAbelianGroup) -> Result<AbHom, AbGroupError> {
    let ctx = GammaContext::new(a)?;
    let gamma_rels = Lattice::from_matrix(&ctx.relation_hnf_matrix());
    let gamma_presented = Presented::from_relation_lattice(gamma_rels);
    let cq_gamma = CanonicalQuotient::new(&gamma_presented);

    let tensor_presented = ctx.tensor_square_presented();
    let cq_tensor = CanonicalQuotient::new(&tensor_presented);
    debug_assert_eq!(cq_tensor.group(), &tensor(a, a));

    let tmap = ctx.square_coords_matrix();
    let gamma_group = cq_gamma.group().clone();
    let mut rows = Vec::with_capacity(gamma_group.coord_count());
    for j in 0..gamma_group.coord_count() {
        let lift = cq_gamma.lift(j);
        let nat = tmap.apply_row(&lift)?;
        rows.push(cq_tensor.project(&nat));
    }
    let matrix = IntMatrix::from_row_vectors(rows, cq_tensor.group().coord_count())?;
    AbHom::new(gamma_group, cq_tensor.group().clone(), matrix)
}

/// Kernel of `Γ(A) → A⊗A` for finite `A`, computed directly as the
/// subquotient `{v : v·T ∈ L_⊗} / L_Γ` of the symbol space.
pub fn phi(a: &FgAbelianGroup) -> Result<FgAbelianGroup, AbGroupError> {
    let ctx = GammaContext::new(a)?;
    let n = ctx.order;
    let m = ctx.modulus;
    let l_rows = ctx.relation_hnf_rows();

    // Preimage lattice K = {v ∈ ℤⁿ : v·T ≡ 0 mod tensor relations}.
    let tmap = ctx.square_coords_matrix();
    let k2 = tmap.cols();
    let nat_rels = ctx.tensor_square_relation_rows();
    let stacked = tmap
        .stack(&IntMatrix::from_row_vectors(nat_rels, k2)?)
        .expect("same width");
    let kernel = left_kernel(&stacked);
    // K contains m·ℤⁿ (m kills every x⊗x), so the bounded reducer applies.
    let mut red = ModRowReducer::new(n, m);
    let mut sparse = Vec::new();
    for i in 0..kernel.rows() {
        sparse.clear();
        for (c, v) in kernel.row(i)[..n].iter().enumerate() {
            if !v.is_zero() {
                let vm = i64::try_from(&v.mod_floor(&BigInt::from(m)))
                    .expect("residue fits in i64");
                if vm != 0 {
                    sparse.push((c, vm));
                }
            }
        }
        red.insert(&sparse);
    }
    let k_rows = red.into_hnf_rows();

    // Express the Γ relations in the K basis; the quotient K/L is Φ.
    let mut x_rows = Vec::with_capacity(n);
    for l_row in &l_rows {
        x_rows.push(coords_in_triangular_basis(l_row, &k_rows, m));
    }
    let factors = invariant_factors_mod(x_rows, n, m);
    Ok(group_from_i64_orders(&factors))
}

/// Cokernel of `Γ(A) → A⊗A`: the exterior square. The free part follows
/// `Λ²(ℤ^f ⊕ T) = ℤ^{f(f-1)/2} ⊕ T^f ⊕ Λ²(T)`; the torsion part is an
/// honest cokernel computation.
pub fn exterior_square(a: &FgAbelianGroup) -> FgAbelianGroup {
    let f = a.free_rank();
    let ds = a.invariant_factors().to_vec();

    // Image of Γ(T) in T⊗T is spanned by the diagonal squares eᵢ⊗eᵢ and
    // the polarizations eᵢ⊗eⱼ + eⱼ⊗eᵢ: every x⊗x is an integer
    // combination of these.
    let k = ds.len();
    let k2 = k * k;
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..k {
        let mut row = vec![BigInt::zero(); k2];
        row[i * k + i] = BigInt::from(1);
        gens.push(row);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let mut row = vec![BigInt::zero(); k2];
            row[i * k + j] = BigInt::from(1);
            row[j * k + i] = BigInt::from(1);
            gens.push(row);
        }
    }
    let mut rel_rows = tensor_relation_rows(&ds);
    rel_rows.extend(gens);
    let p = Presented::from_relation_rows(k2, &rel_rows).expect("rows built to width");
    let lambda_torsion = CanonicalQuotient::new(&p).group().clone();

    // Assemble with the free contributions.
    let mut orders: Vec<BigInt> = lambda_torsion.invariant_factors().to_vec();
    for d in &ds {
        for _ in 0..f {
            orders.push(d.clone());
        }
    }
    FgAbelianGroup::from_cyclic_orders(
        f * f.saturating_sub(1) / 2 + f * lambda_torsion.free_rank(),
        &orders,
    )
}

/// Natural relation rows of `T ⊗ T` on the `k²` coordinates `eᵢ⊗eⱼ`:
/// `gcd(dᵢ, dⱼ)·(eᵢ⊗eⱼ)`.
fn tensor_relation_rows(ds: &[BigInt]) -> Vec<Vec<BigInt>> {
    let k = ds.len();
    let k2 = k * k;
    let mut rows = Vec::with_capacity(k2);
    for i in 0..k {
        for j in 0..k {
            let mut row = vec![BigInt::zero(); k2];
            row[i * k + j] = ds[i].gcd(&ds[j]);
            rows.push(row);
        }
    }
    rows
}

fn group_from_i64_orders(orders: &[i64]) -> FgAbelianGroup {
    let big: Vec<BigInt> = orders.iter().map(|&o| BigInt::from(o)).collect();
    FgAbelianGroup::from_cyclic_orders(0, &big)
}

/// Exact coordinates of `v` in a full-rank upper-triangular basis (rows of
/// `basis`, pivot at column = row index), reduced mod `m` for the quotient
/// computation. Arithmetic is checked: the bases produced here are close
/// to diagonal, so intermediates stay small.
fn coords_in_triangular_basis(v: &[i64], basis: &[Vec<i64>], m: i64) -> Vec<i64> {
    let n = v.len();
    let mut rest = v.to_vec();
    let mut coords = vec![0i64; n];
    for c in 0..n {
        if rest[c] == 0 {
            continue;
        }
        let p = basis[c][c];
        assert_eq!(rest[c] % p, 0, "vector not in claimed sublattice");
        let q = rest[c] / p;
        coords[c] = q.rem_euclid(m);
        for j in c..n {
            let b = basis[c][j];
            if b != 0 {
                rest[j] = rest[j]
                    .checked_sub(q.checked_mul(b).expect("coordinate overflow"))
                    .expect("coordinate overflow");
            }
        }
    }
    assert!(rest.iter().all(|&x| x == 0), "vector not in claimed sublattice");
    coords
}

/// Shared element bookkeeping for the presentation-based constructions on
/// a finite group.
struct GammaContext {
    factors: Vec<i64>,
    strides: Vec<u64>,
    order: usize,
    modulus: i64,
}

impl GammaContext {
    fn new(a: &FgAbelianGroup) -> Result<Self, AbGroupError> {
        if !a.is_finite() {
            return Err(AbGroupError::InfiniteGroup);
        }
        let mut factors = Vec::with_capacity(a.invariant_factors().len());
        for d in a.invariant_factors() {
            factors.push(i64::try_from(d).map_err(|_| AbGroupError::PresentationTooLarge {
                order: a.order().map(|o| o.to_string()).unwrap_or_default(),
            })?);
        }
        let order = factors.iter().map(|&d| d as u64).product::<u64>();
        if order > MAX_PRESENTATION_ORDER {
            return Err(AbGroupError::PresentationTooLarge {
                order: order.to_string(),
            });
        }
        let mut strides = Vec::with_capacity(factors.len());
        let mut s = 1u64;
        for &d in &factors {
            strides.push(s);
            s *= d as u64;
        }
        let exp = factors.last().copied().unwrap_or(1);
        let modulus = if exp % 2 == 0 { 2 * exp } else { exp };
        Ok(GammaContext {
            factors,
            strides,
            order: order as usize,
            modulus,
        })
    }

    fn coords_of(&self, idx: usize) -> Vec<i64> {
        let mut rest = idx as u64;
        self.factors
            .iter()
            .map(|&d| {
                let c = (rest % d as u64) as i64;
                rest /= d as u64;
                c
            })
            .collect()
    }

    fn index_of(&self, coords: &[i64]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as u64 * s)
            .sum::<u64>() as usize
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (cx, cy) = (self.coords_of(x), self.coords_of(y));
        let sum: Vec<i64> = cx
            .iter()
            .zip(&cy)
            .zip(&self.factors)
            .map(|((&a, &b), &d)| (a + b) % d)
            .collect();
        self.index_of(&sum)
    }

    fn neg(&self, x: usize) -> usize {
        let c: Vec<i64> = self
            .coords_of(x)
            .iter()
            .zip(&self.factors)
            .map(|(&a, &d)| (d - a) % d)
            .collect();
        self.index_of(&c)
    }

    fn generator_indices(&self) -> Vec<usize> {
        (0..self.factors.len())
            .map(|i| self.strides[i] as usize)
            .collect()
    }

    /// Third-order relation row for the multiset `{x, y, z}`.
    fn triple_row(&self, x: usize, y: usize, z: usize, out: &mut Vec<(usize, i64)>) {
        out.clear();
        let xy = self.add(x, y);
        let xz = self.add(x, z);
        let yz = self.add(y, z);
        let xyz = self.add(xy, z);
        out.extend_from_slice(&[
            (xyz, 1),
            (xy, -1),
            (xz, -1),
            (yz, -1),
            (x, 1),
            (y, 1),
            (z, 1),
        ]);
    }

    fn base_rows(&self, red: &mut ModRowReducer) {
        red.insert(&[(0, 1)]); // γ(0) = 0
        for x in 0..self.order {
            let nx = self.neg(x);
            if nx != x {
                red.insert(&[(nx, 1), (x, -1)]);
            }
        }
    }

    /// HNF rows of the relation lattice, streaming the generator-restricted
    /// scheme.
    fn relation_hnf_rows(&self) -> Vec<Vec<i64>> {
        let mut red = ModRowReducer::new(self.order, self.modulus);
        self.base_rows(&mut red);
        let gens = self.generator_indices();
        let mut row = Vec::with_capacity(7);
        for x in 0..self.order {
            for y in x..self.order {
                for &g in &gens {
                    self.triple_row(x, y, g, &mut row);
                    red.insert(&row);
                }
            }
        }
        red.into_hnf_rows()
    }

    fn relation_hnf_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = self
            .relation_hnf_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        IntMatrix::from_row_vectors(rows, self.order).expect("square")
    }

    /// HNF rows with the relation for every ordered triple (oracle path).
    fn all_triples_hnf_rows(&self) -> Vec<Vec<i64>> {
        let mut red = ModRowReducer::new(self.order, self.modulus);
        self.base_rows(&mut red);
        let mut row = Vec::with_capacity(7);
        for x in 0..self.order {
            for y in 0..self.order {
                for z in 0..self.order {
                    self.triple_row(x, y, z, &mut row);
                    red.insert(&row);
                }
            }
        }
        red.into_hnf_rows()
    }

    /// The `|A| × k²` matrix of `γ(x) ↦ x⊗x` in natural tensor
    /// coordinates.
    fn square_coords_matrix(&self) -> IntMatrix {
        let k = self.factors.len();
        let k2 = k * k;
        let mut rows = Vec::with_capacity(self.order);
        for x in 0..self.order {
            let c = self.coords_of(x);
            let mut row = vec![BigInt::zero(); k2];
            for i in 0..k {
                for j in 0..k {
                    row[i * k + j] = BigInt::from(c[i] * c[j]);
                }
            }
            rows.push(row);
        }
        IntMatrix::from_row_vectors(rows, k2).expect("rows built to width")
    }

    fn tensor_square_relation_rows(&self) -> Vec<Vec<BigInt>> {
        let ds: Vec<BigInt> = self.factors.iter().map(|&d| BigInt::from(d)).collect();
        tensor_relation_rows(&ds)
    }

    fn tensor_square_presented(&self) -> Presented {
        let k2 = self.factors.len() * self.factors.len();
        Presented::from_relation_rows(k2, &self.tensor_square_relation_rows())
            .expect("rows built to width")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(orders: &[u64]) -> FgAbelianGroup {
        let big: Vec<BigInt> = orders.iter().map(|&o| BigInt::from(o)).collect();
        FgAbelianGroup::from_cyclic_orders(0, &big)
    }

    #[test]
    fn gamma_of_trivial_is_trivial() {
        for method in [GammaMethod::Presentation, GammaMethod::ClosedForm] {
            assert!(whitehead_gamma(&FgAbelianGroup::trivial(), method)
                .unwrap()
                .is_trivial());
        }
    }

    #[test]
    fn gamma_of_small_cyclic_groups() {
        // Γ(ℤ/2) = ℤ/4, Γ(ℤ/3) = ℤ/3, Γ(ℤ/4) = ℤ/8.
        for (n, expect) in [(2u64, 4u64), (3, 3), (4, 8)] {
            for method in [GammaMethod::Presentation, GammaMethod::ClosedForm] {
                assert_eq!(
                    whitehead_gamma(&FgAbelianGroup::cyclic(n), method).unwrap(),
                    FgAbelianGroup::cyclic(expect),
                    "Γ(ℤ/{n}) via {method:?}"
                );
            }
        }
    }

    #[test]
    fn gamma_cyclic_order_formula() {
        // |Γ(ℤ/n)| = gcd(2n, n²) for n = 1..12.
        for n in 1u64..=12 {
            let g = whitehead_gamma(&FgAbelianGroup::cyclic(n), GammaMethod::Presentation).unwrap();
            let expect = BigInt::from(2 * n).gcd(&BigInt::from(n * n));
            assert_eq!(g.order().unwrap(), expect, "n = {n}");
        }
    }

    #[test]
    fn gamma_of_klein_four_group() {
        // Γ(ℤ/2 ⊕ ℤ/2) = ℤ/4 ⊕ ℤ/4 ⊕ ℤ/2, presentation as the oracle.
        let v4 = cyc(&[2, 2]);
        let by_pres = whitehead_gamma(&v4, GammaMethod::Presentation).unwrap();
        let by_closed = whitehead_gamma(&v4, GammaMethod::ClosedForm).unwrap();
        let expect = cyc(&[4, 4, 2]);
        assert_eq!(by_pres, expect);
        assert_eq!(by_closed, expect);
    }

    #[test]
    fn gamma_closed_form_handles_free_rank() {
        // Γ(ℤ) = ℤ; Γ(ℤ²) = ℤ³; Γ(ℤ ⊕ ℤ/2) = ℤ ⊕ ℤ/4 ⊕ ℤ/2.
        assert_eq!(
            whitehead_gamma(&FgAbelianGroup::free(1), GammaMethod::ClosedForm).unwrap(),
            FgAbelianGroup::free(1)
        );
        assert_eq!(
            whitehead_gamma(&FgAbelianGroup::free(2), GammaMethod::ClosedForm).unwrap(),
            FgAbelianGroup::free(3)
        );
        let mixed = FgAbelianGroup::new(1, vec![BigInt::from(2)]).unwrap();
        let g = whitehead_gamma(&mixed, GammaMethod::ClosedForm).unwrap();
        assert_eq!(g.free_rank(), 1);
        assert_eq!(g.invariant_factors(), &[BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn presentation_rejects_infinite_groups() {
        assert_eq!(
            whitehead_gamma(&FgAbelianGroup::free(1), GammaMethod::Presentation),
            Err(AbGroupError::InfiniteGroup)
        );
    }

    #[test]
    fn reduced_scheme_spans_all_triples() {
        // The generator-restricted scheme must produce the same lattice as
        // the exhaustive ordered-triple enumeration.
        for orders in [
            vec![2u64],
            vec![3],
            vec![4],
            vec![6],
            vec![2, 2],
            vec![2, 4],
            vec![3, 3],
            vec![2, 2, 2],
        ] {
            let a = cyc(&orders);
            let ctx = GammaContext::new(&a).unwrap();
            assert_eq!(
                ctx.relation_hnf_rows(),
                ctx.all_triples_hnf_rows(),
                "lattices differ for {orders:?}"
            );
        }
    }

    #[test]
    fn whitehead_map_examples() {
        // A = 0 → zero map.
        let z0 = whitehead_map(&FgAbelianGroup::trivial()).unwrap();
        assert!(z0.is_zero_map());

        // A = ℤ/2: Γ ≅ ℤ/4 surjects onto ℤ/2⊗ℤ/2 = ℤ/2, γ(1) ↦ 1⊗1.
        let h = whitehead_map(&FgAbelianGroup::cyclic(2)).unwrap();
        assert_eq!(h.source(), &FgAbelianGroup::cyclic(4));
        assert_eq!(h.target(), &FgAbelianGroup::cyclic(2));
        assert!(!h.is_zero_map());

        // A = ℤ/3: an isomorphism ℤ/3 → ℤ/3.
        let h3 = whitehead_map(&FgAbelianGroup::cyclic(3)).unwrap();
        assert_eq!(h3.source(), &FgAbelianGroup::cyclic(3));
        assert_eq!(h3.target(), &FgAbelianGroup::cyclic(3));
        let img = h3.apply(&[BigInt::from(1)]).unwrap();
        assert!(!img[0].is_zero());
    }

    #[test]
    fn phi_examples() {
        assert!(phi(&FgAbelianGroup::trivial()).unwrap().is_trivial());
        assert_eq!(
            phi(&FgAbelianGroup::cyclic(2)).unwrap(),
            FgAbelianGroup::cyclic(2)
        );
        assert!(phi(&FgAbelianGroup::cyclic(3)).unwrap().is_trivial());
    }

    #[test]
    fn exterior_square_examples() {
        for n in 1u64..=9 {
            assert!(
                exterior_square(&FgAbelianGroup::cyclic(n)).is_trivial(),
                "Λ²(ℤ/{n})"
            );
        }
        assert!(exterior_square(&FgAbelianGroup::trivial()).is_trivial());
        assert_eq!(exterior_square(&cyc(&[2, 2])), FgAbelianGroup::cyclic(2));
        // Λ²(ℤ^r) = ℤ^{r(r-1)/2}
        assert_eq!(
            exterior_square(&FgAbelianGroup::free(3)),
            FgAbelianGroup::free(3)
        );
        assert_eq!(
            exterior_square(&FgAbelianGroup::free(2)),
            FgAbelianGroup::free(1)
        );
    }

    #[test]
    fn four_term_order_identity_small() {
        // |Φ(A)|·|A⊗A| = |Γ(A)|·|Λ²(A)| on a few small groups.
        for orders in [vec![2u64], vec![4], vec![2, 2], vec![2, 4], vec![3, 3]] {
            let a = cyc(&orders);
            let lhs = phi(&a).unwrap().order().unwrap()
                * tensor(&a, &a).order().unwrap();
            let rhs = whitehead_gamma(&a, GammaMethod::Presentation)
                .unwrap()
                .order()
                .unwrap()
                * exterior_square(&a).order().unwrap();
            assert_eq!(lhs, rhs, "orders {orders:?}");
        }
    }
}
