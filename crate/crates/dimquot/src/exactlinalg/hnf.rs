use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Canonical row Hermite normal form: pivots positive, entries above each
/// pivot reduced into `[0, pivot)`, zero rows removed, pivot columns
/// strictly increasing. Two matrices span the same row lattice iff their
/// canonical HNFs are identical.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut work = m.clone();
    let pivots = echelonize(&mut work, None);
    canonicalize(&mut work, &pivots);
    let rows: Vec<Vec<BigInt>> = pivots.iter().map(|&(r, _)| work.row_vec(r)).collect();
    IntMatrix::from_row_vectors(rows, m.cols()).expect("rows come from a matrix of this width")
}

/// HNF with the unimodular row transform: returns `(h, u, pivots)` where
/// `u * m = h`, `u` is unimodular and `h` still carries its zero rows (so
/// `u` rows aligned with them span the left kernel of `m`).
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix, Vec<(usize, usize)>) {
    let mut work = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let pivots = echelonize(&mut work, Some(&mut u));
    canonicalize_with(&mut work, &pivots, Some(&mut u));
    (work, u, pivots)
}

/// Basis of the left kernel `{x : x·m = 0}` as rows (saturated lattice).
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u, pivots) = hnf_with_transform(m);
    let rank = pivots.len();
    let rows: Vec<Vec<BigInt>> = (rank..h.rows()).map(|i| u.row_vec(i)).collect();
    debug_assert!((rank..h.rows()).all(|i| h.row_is_zero(i)));
    IntMatrix::from_row_vectors(rows, m.rows()).expect("kernel rows have matrix height")
}

/// Reduces `work` to row echelon form over ℤ; returns the pivot list
/// `(row, col)` in order. Rows at index ≥ pivots.len() end up zero.
fn echelonize(work: &mut IntMatrix, mut u: Option<&mut IntMatrix>) -> Vec<(usize, usize)> {
    let rows = work.rows();
    let cols = work.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Smallest nonzero entry first keeps the Euclidean combinations tame.
        let pivot_row = (r..rows)
            .filter(|&i| !work[(i, c)].is_zero())
            .min_by_key(|&i| work[(i, c)].abs());
        let Some(p) = pivot_row else { continue };
        work.swap_rows(r, p);
        if let Some(u) = u.as_deref_mut() {
            u.swap_rows(r, p);
        }
        for i in (r + 1)..rows {
            if work[(i, c)].is_zero() {
                continue;
            }
            let a = work[(r, c)].clone();
            let b = work[(i, c)].clone();
            let eg = a.extended_gcd(&b);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            debug_assert!(!g.is_zero());
            let qa = &a / &g;
            let qb = &b / &g;
            combine_rows(work, r, i, &s, &t, &qa, &qb);
            if let Some(u) = u.as_deref_mut() {
                combine_rows(u, r, i, &s, &t, &qa, &qb);
            }
            debug_assert!(work[(i, c)].is_zero());
        }
        if work[(r, c)].is_negative() {
            work.negate_row(r);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(r);
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

/// Unimodular 2-row update: `(row_r, row_i) ← (s·row_r + t·row_i,
/// -qb·row_r + qa·row_i)` where `s·a + t·b = g`, `qa = a/g`, `qb = b/g`.
fn combine_rows(m: &mut IntMatrix, r: usize, i: usize, s: &BigInt, t: &BigInt, qa: &BigInt, qb: &BigInt) {
    for j in 0..m.cols() {
        let x = m[(r, j)].clone();
        let y = m[(i, j)].clone();
        m[(r, j)] = s * &x + t * &y;
        m[(i, j)] = qa * &y - qb * &x;
    }
}

fn canonicalize(work: &mut IntMatrix, pivots: &[(usize, usize)]) {
    canonicalize_with(work, pivots, None)
}

/// Reduces entries above every pivot into `[0, pivot)`.
fn canonicalize_with(work: &mut IntMatrix, pivots: &[(usize, usize)], mut u: Option<&mut IntMatrix>) {
    for &(r, c) in pivots {
        let p = work[(r, c)].clone();
        for i in 0..r {
            let q = work[(i, c)].div_floor(&p);
            if q.is_zero() {
                continue;
            }
            let neg_q = -q;
            work.add_multiple_of_row(i, r, &neg_q);
            if let Some(u) = u.as_deref_mut() {
                u.add_multiple_of_row(i, r, &neg_q);
            }
        }
    }
}
