use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Smith normal form data: positive invariant factors `d₁ | d₂ | …`
/// (including any leading 1s) together with the free rank of the cokernel
/// of the matrix as a map into `ℤ^rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

/// Diagonalizes `m` by unimodular row and column operations and reads off
/// the invariant factors. The cokernel of `m : ℤ^cols → ℤ^rows` is
/// `⊕ ℤ/dᵢ ⊕ ℤ^free_rank`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let mut work = m.clone();
    let diag = diagonalize(&mut work, None, None);
    let factors: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_zero()).collect();
    SmithNormalForm {
        free_rank: m.rows() - factors.len(),
        invariant_factors: factors,
    }
}

/// Smith form with the right transform tracked: returns `(diag, v, v_inv)`
/// where `u · m · v` is diagonal for some unimodular `u`, `diag` has one
/// entry per column of `m` (zeros for columns beyond the rank), and
/// `v · v_inv = 1`. Used to put quotient presentations `ℤⁿ/rowspan(m)`
/// into coordinates: `x ↦ x·v` carries the row span onto `⊕ dᵢℤ·eᵢ`.
pub(crate) fn snf_with_right_transform(m: &IntMatrix) -> (Vec<BigInt>, IntMatrix, IntMatrix) {
    let mut work = m.clone();
    let mut v = IntMatrix::identity(m.cols());
    let mut v_inv = IntMatrix::identity(m.cols());
    let diag = diagonalize(&mut work, Some(&mut v), Some(&mut v_inv));
    let mut full = vec![BigInt::zero(); m.cols()];
    for (i, d) in diag.into_iter().enumerate() {
        full[i] = d;
    }
    (full, v, v_inv)
}

/// Core Smith elimination. Column operations are mirrored on `v` and, as
/// inverse row operations, on `v_inv`, preserving `v · v_inv = 1`.
/// Returns the nonzero diagonal entries with the divisibility chain fixed.
fn diagonalize(
    work: &mut IntMatrix,
    mut v: Option<&mut IntMatrix>,
    mut v_inv: Option<&mut IntMatrix>,
) -> Vec<BigInt> {
    let rows = work.rows();
    let cols = work.cols();
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        let Some((pr, pc)) = smallest_nonzero(work, t) else {
            break;
        };
        work.swap_rows(t, pr);
        swap_cols_tracked(work, &mut v, &mut v_inv, t, pc);
        // Alternate row and column elimination until the pivot divides
        // everything in its row and column.
        loop {
            let mut again = false;
            for i in (t + 1)..rows {
                if work[(i, t)].is_zero() {
                    continue;
                }
                let q = work[(i, t)].div_floor(&work[(t, t)]);
                let neg_q = -q;
                work.add_multiple_of_row(i, t, &neg_q);
                if !work[(i, t)].is_zero() {
                    work.swap_rows(i, t);
                    again = true;
                }
            }
            for j in (t + 1)..cols {
                if work[(t, j)].is_zero() {
                    continue;
                }
                let q = work[(t, j)].div_floor(&work[(t, t)]);
                let neg_q = -q;
                add_col_tracked(work, &mut v, &mut v_inv, j, t, &neg_q);
                if !work[(t, j)].is_zero() {
                    swap_cols_tracked(work, &mut v, &mut v_inv, j, t);
                    again = true;
                }
            }
            if !again {
                break;
            }
        }
        // The pivot must divide the rest of the submatrix; if not, fold the
        // offending row in and restart this pivot.
        let mut clean = true;
        'scan: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if !work[(i, j)].mod_floor(&work[(t, t)]).is_zero() {
                    let one = BigInt::one();
                    work.add_multiple_of_row(t, i, &one);
                    clean = false;
                    break 'scan;
                }
            }
        }
        if !clean {
            continue;
        }
        if work[(t, t)].is_negative() {
            work.negate_row(t);
        }
        t += 1;
    }
    (0..t).map(|i| work[(i, i)].clone()).collect()
}

fn smallest_nonzero(work: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..work.rows() {
        for j in from..work.cols() {
            if work[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some(b) if work[(b.0, b.1)].abs() <= work[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_cols_tracked(
    work: &mut IntMatrix,
    v: &mut Option<&mut IntMatrix>,
    v_inv: &mut Option<&mut IntMatrix>,
    a: usize,
    b: usize,
) {
    if a == b {
        return;
    }
    work.swap_cols(a, b);
    if let Some(v) = v.as_deref_mut() {
        v.swap_cols(a, b);
    }
    if let Some(vi) = v_inv.as_deref_mut() {
        vi.swap_rows(a, b);
    }
}

/// `col[dst] += q·col[src]` on `work` and `v`; the inverse op on `v_inv`
/// is `row[src] -= q·row[dst]`.
fn add_col_tracked(
    work: &mut IntMatrix,
    v: &mut Option<&mut IntMatrix>,
    v_inv: &mut Option<&mut IntMatrix>,
    dst: usize,
    src: usize,
    q: &BigInt,
) {
    work.add_multiple_of_col(dst, src, q);
    if let Some(v) = v.as_deref_mut() {
        v.add_multiple_of_col(dst, src, q);
    }
    if let Some(vi) = v_inv.as_deref_mut() {
        let neg_q = -q.clone();
        vi.add_multiple_of_row(src, dst, &neg_q);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_i64(rows: &[&[i64]]) -> (Vec<i64>, usize) {
        let s = smith_normal_form(&IntMatrix::from_rows_i64(rows));
        (
            s.invariant_factors
                .iter()
                .map(|d| i64::try_from(d).unwrap())
                .collect(),
            s.free_rank,
        )
    }

    #[test]
    fn identity_has_unit_factors() {
        assert_eq!(snf_i64(&[&[1, 0], &[0, 1]]), (vec![1, 1], 0));
    }

    #[test]
    fn zero_map_is_all_cokernel() {
        assert_eq!(snf_i64(&[&[0]]), (vec![], 1));
    }

    #[test]
    fn coprime_diagonal_merges() {
        // det 6 with entry gcd 1 forces d₁ = 1, d₂ = 6.
        assert_eq!(snf_i64(&[&[2, 0], &[0, 3]]), (vec![1, 6], 0));
    }

    #[test]
    fn divisibility_chain_holds_on_random_shape() {
        let m = IntMatrix::from_rows_i64(&[&[4, 6, 10], &[6, 12, 8], &[2, 2, 2]]);
        let s = smith_normal_form(&m);
        for w in s.invariant_factors.windows(2) {
            assert!(w[1].mod_floor(&w[0]).is_zero(), "{:?}", s.invariant_factors);
        }
    }

    #[test]
    fn right_transform_is_inverse_pair() {
        let m = IntMatrix::from_rows_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let (_, v, v_inv) = snf_with_right_transform(&m);
        assert_eq!(v.mul(&v_inv).unwrap(), IntMatrix::identity(3));
        assert_eq!(v_inv.mul(&v).unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn right_transform_diagonalizes_row_span() {
        // rowspan(m)·v must equal ⊕ dᵢ·eᵢ as a lattice.
        use crate::exactlinalg::hermite_normal_form;
        let m = IntMatrix::from_rows_i64(&[&[2, 4], &[4, 2]]);
        let (diag, v, _) = snf_with_right_transform(&m);
        let moved = m.mul(&v).unwrap();
        let h = hermite_normal_form(&moved);
        let mut expect_rows = Vec::new();
        for (i, d) in diag.iter().enumerate() {
            if !d.is_zero() {
                let mut row = vec![BigInt::zero(); 2];
                row[i] = d.clone();
                expect_rows.push(row);
            }
        }
        let expected = hermite_normal_form(
            &IntMatrix::from_row_vectors(expect_rows, 2).unwrap(),
        );
        assert_eq!(h, expected);
    }
}
