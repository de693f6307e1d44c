//! Bounded-entry row reduction for lattices known to contain `m·ℤⁿ`.
//!
//! When a relation lattice `L ⊆ ℤⁿ` provably contains `m·ℤⁿ` for a small
//! modulus `m`, its Hermite basis can be accumulated with every entry kept
//! in `[0, m)`: the reducer seeds the basis with `m·I` (which adds nothing
//! to the span) and folds streamed rows in with `i64` arithmetic. This is
//! what makes presentation-sized inputs (millions of sparse rows over
//! several hundred columns) practical.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;

use super::IntMatrix;

/// Largest modulus for which all intermediate `i64` products are safe.
const MAX_MODULUS: i64 = 1 << 15;

pub(crate) struct ModRowReducer {
    cols: usize,
    modulus: i64,
    /// `basis[c]` is the row with pivot column `c`, stored sparsely as
    /// `(col, value)` pairs sorted by column; the first pair is the pivot.
    /// Entries lie in `[0, m)`. Seeded with `m·e_c`, so always nonempty.
    basis: Vec<Vec<(u32, i64)>>,
    scratch: Vec<i64>,
    stamp: Vec<u64>,
    epoch: u64,
    queue: BinaryHeap<Reverse<u32>>,
}

impl ModRowReducer {
    pub(crate) fn new(cols: usize, modulus: i64) -> Self {
        assert!(
            modulus > 0 && modulus <= MAX_MODULUS,
            "modulus {modulus} out of supported range"
        );
        ModRowReducer {
            cols,
            modulus,
            basis: (0..cols).map(|c| vec![(c as u32, modulus)]).collect(),
            scratch: vec![0; cols],
            stamp: vec![0; cols],
            epoch: 0,
            queue: BinaryHeap::new(),
        }
    }

    #[inline]
    fn get(&self, j: usize) -> i64 {
        if self.stamp[j] == self.epoch {
            self.scratch[j]
        } else {
            0
        }
    }

    #[inline]
    fn set(&mut self, j: usize, v: i64) {
        self.stamp[j] = self.epoch;
        self.scratch[j] = v;
    }

    /// Folds one row (sparse `(column, value)` pairs, any order, duplicates
    /// accumulated) into the basis.
    pub(crate) fn insert(&mut self, entries: &[(usize, i64)]) {
        let m = self.modulus;
        self.epoch += 1;
        self.queue.clear();
        for &(c, val) in entries {
            debug_assert!(c < self.cols);
            let v = (self.get(c) + val).rem_euclid(m);
            self.set(c, v);
            if v != 0 {
                self.queue.push(Reverse(c as u32));
            }
        }
        while let Some(Reverse(c32)) = self.queue.pop() {
            let c = c32 as usize;
            let v = self.get(c);
            if v == 0 {
                continue;
            }
            let p = self.basis[c][0].1;
            debug_assert_eq!(self.basis[c][0].0 as usize, c);
            if v % p == 0 {
                // Clear against the basis row.
                let q = v / p;
                let row = std::mem::take(&mut self.basis[c]);
                for &(j, b) in &row {
                    let ju = j as usize;
                    let nv = (self.get(ju) - q * b).rem_euclid(m);
                    self.set(ju, nv);
                    if ju > c && nv != 0 {
                        self.queue.push(Reverse(j));
                    }
                }
                self.basis[c] = row;
            } else {
                // gcd update (rare once pivots settle): merge the basis row
                // with the scratch tail into a new pivot row.
                let (g, s, t) = xgcd(p, v);
                let (qp, qv) = (p / g, v / g);
                let row = std::mem::take(&mut self.basis[c]);
                let mut row_dense = vec![0i64; self.cols - c];
                for &(j, b) in &row {
                    row_dense[j as usize - c] = b;
                }
                let mut new_row = Vec::new();
                for j in c..self.cols {
                    let b = row_dense[j - c];
                    let sc = self.get(j);
                    if b == 0 && sc == 0 {
                        continue;
                    }
                    let nb = (s * b + t * sc).rem_euclid(m);
                    if nb != 0 {
                        new_row.push((j as u32, nb));
                    }
                    let nsc = (qp * sc - qv * b).rem_euclid(m);
                    self.set(j, nsc);
                    if j > c && nsc != 0 {
                        self.queue.push(Reverse(j as u32));
                    }
                }
                debug_assert_eq!(new_row.first(), Some(&(c as u32, g.rem_euclid(m))));
                self.basis[c] = new_row;
            }
            debug_assert_eq!(self.get(c), 0);
        }
    }

    /// Finishes canonicalization and returns the dense HNF basis rows of
    /// `span(inserted rows) + m·ℤⁿ` (always full rank, entries in
    /// `[0, pivot_col)` above each pivot). Entries are kept reduced mod `m`
    /// throughout, which is legal because `m·eⱼ` lies in the span.
    pub(crate) fn into_hnf_rows(self) -> Vec<Vec<i64>> {
        let m = self.modulus;
        let n = self.cols;
        let mut dense: Vec<Vec<i64>> = vec![vec![0; n]; n];
        for (c, row) in self.basis.iter().enumerate() {
            for &(j, v) in row {
                dense[c][j as usize] = v;
            }
        }
        for c in 0..n {
            let pivot = dense[c][c];
            debug_assert!(pivot > 0);
            for r in 0..c {
                let q = dense[r][c].div_euclid(pivot);
                if q != 0 {
                    for &(j, b) in &self.basis[c] {
                        let ju = j as usize;
                        dense[r][ju] = (dense[r][ju] - q * b).rem_euclid(m);
                    }
                }
                // After reduction the entry is a remainder mod the pivot.
                debug_assert!(0 <= dense[r][c] && dense[r][c] < pivot);
            }
        }
        dense
    }

    pub(crate) fn into_hnf_matrix(self) -> IntMatrix {
        let cols = self.cols;
        let rows: Vec<Vec<BigInt>> = self
            .into_hnf_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        IntMatrix::from_row_vectors(rows, cols).expect("square basis")
    }
}

/// Invariant factors (with 1s stripped) of `ℤⁿ/(rowspan(rows) + m·ℤⁿ)`.
/// `rows` entries must already lie in `[0, m)`; the matrix is consumed.
pub(crate) fn invariant_factors_mod(mut rows: Vec<Vec<i64>>, n: usize, modulus: i64) -> Vec<i64> {
    assert!(modulus > 0 && modulus <= MAX_MODULUS);
    let m = modulus;
    let height = rows.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < n && t < height {
        // Find the smallest nonzero entry to pivot on.
        let mut best: Option<(usize, usize)> = None;
        for i in t..height {
            for j in t..n {
                let v = rows[i][j];
                if v != 0 && best.map_or(true, |(bi, bj)| v < rows[bi][bj]) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        rows.swap(t, pi);
        if pj != t {
            for row in rows.iter_mut() {
                row.swap(t, pj);
            }
        }
        loop {
            let mut again = false;
            for i in (t + 1)..height {
                if rows[i][t] == 0 {
                    continue;
                }
                let p = rows[t][t];
                if rows[i][t] % p == 0 {
                    let q = rows[i][t] / p;
                    for j in t..n {
                        rows[i][j] = (rows[i][j] - q * rows[t][j]).rem_euclid(m);
                    }
                } else {
                    let (g, s, u) = xgcd(p, rows[i][t]);
                    let (qp, qv) = (p / g, rows[i][t] / g);
                    for j in t..n {
                        let a = rows[t][j];
                        let b = rows[i][j];
                        rows[t][j] = (s * a + u * b).rem_euclid(m);
                        rows[i][j] = (qp * b - qv * a).rem_euclid(m);
                    }
                    again = true;
                }
            }
            for j in (t + 1)..n {
                if rows[t][j] == 0 {
                    continue;
                }
                let p = rows[t][t];
                if rows[t][j] % p == 0 {
                    let q = rows[t][j] / p;
                    for i in t..height {
                        rows[i][j] = (rows[i][j] - q * rows[i][t]).rem_euclid(m);
                    }
                } else {
                    let (g, s, u) = xgcd(p, rows[t][j]);
                    let (qp, qv) = (p / g, rows[t][j] / g);
                    for i in t..height {
                        let a = rows[i][t];
                        let b = rows[i][j];
                        rows[i][t] = (s * a + u * b).rem_euclid(m);
                        rows[i][j] = (qp * b - qv * a).rem_euclid(m);
                    }
                    again = true;
                }
            }
            if !again {
                break;
            }
        }
        diag.push(rows[t][t]);
        t += 1;
    }
    // Each coordinate also carries the implicit m·e relation.
    let mut orders: Vec<i64> = diag.iter().map(|&d| gcd(d, m)).collect();
    orders.resize(n, m);
    fix_divisibility_chain(&mut orders);
    orders.retain(|&d| d > 1);
    orders
}

/// Normalizes a multiset of cyclic orders into an invariant-factor chain
/// by repeated (gcd, lcm) exchanges.
pub(crate) fn fix_divisibility_chain(orders: &mut [i64]) {
    orders.sort_unstable();
    loop {
        let mut changed = false;
        for i in 0..orders.len() {
            for j in (i + 1)..orders.len() {
                if orders[j] % orders[i] != 0 {
                    let g = gcd(orders[i], orders[j]);
                    let l = orders[i] / g * orders[j];
                    orders[i] = g;
                    orders[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
        orders.sort_unstable();
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, s, t)` with `g = gcd(a, b) ≥ 0` and `s·a + t·b = g`.
fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::{hermite_normal_form, IntMatrix};

    #[test]
    fn xgcd_bezout_identity() {
        for a in -20..20i64 {
            for b in -20..20i64 {
                let (g, s, t) = xgcd(a, b);
                assert_eq!(g, gcd(a, b));
                assert_eq!(s * a + t * b, g);
            }
        }
    }

    #[test]
    fn reducer_matches_bigint_hnf() {
        // span{rows} + 6·ℤ³ computed both ways.
        let m = 6;
        let sparse: Vec<Vec<(usize, i64)>> = vec![
            vec![(0, 2), (1, 1)],
            vec![(1, 3), (2, 5)],
            vec![(0, 4), (2, 1)],
        ];
        let mut red = ModRowReducer::new(3, m);
        for row in &sparse {
            red.insert(row);
        }
        let got = red.into_hnf_matrix();

        let mut rows: Vec<Vec<i64>> = sparse
            .iter()
            .map(|r| {
                let mut dense = vec![0i64; 3];
                for &(c, v) in r {
                    dense[c] = v;
                }
                dense
            })
            .collect();
        for c in 0..3 {
            let mut seed = vec![0i64; 3];
            seed[c] = m;
            rows.push(seed);
        }
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let expected = hermite_normal_form(&IntMatrix::from_rows_i64(&refs));
        assert_eq!(got, expected);
    }

    #[test]
    fn reducer_matches_bigint_hnf_randomized() {
        // Deterministic pseudo-random sparse rows cross-checked against the
        // exact BigInt path.
        let n = 7;
        let m = 12;
        let mut state = 0x12345678u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        let mut all_rows: Vec<Vec<i64>> = Vec::new();
        let mut red = ModRowReducer::new(n, m);
        for _ in 0..40 {
            let mut sparse = Vec::new();
            let mut dense = vec![0i64; n];
            for _ in 0..3 {
                let c = (next() % n as i64).unsigned_abs() as usize % n;
                let v = next() % 25 - 12;
                sparse.push((c, v));
                dense[c] += v;
            }
            for d in dense.iter_mut() {
                *d = d.rem_euclid(m);
            }
            red.insert(&sparse);
            all_rows.push(dense);
        }
        for c in 0..n {
            let mut seed = vec![0i64; n];
            seed[c] = m;
            all_rows.push(seed);
        }
        let refs: Vec<&[i64]> = all_rows.iter().map(|r| r.as_slice()).collect();
        let expected = hermite_normal_form(&IntMatrix::from_rows_i64(&refs));
        assert_eq!(red.into_hnf_matrix(), expected);
    }

    #[test]
    fn factors_mod_of_diag() {
        // span{2e₀, 3e₁} + 12ℤ² gives ℤ/2 ⊕ ℤ/3 ≅ ℤ/6.
        let rows = vec![vec![2, 0], vec![0, 3]];
        let f = invariant_factors_mod(rows, 2, 12);
        assert_eq!(f, vec![6]);
    }

    #[test]
    fn chain_fixing() {
        let mut v = vec![4, 6];
        fix_divisibility_chain(&mut v);
        assert_eq!(v, vec![2, 12]);
    }
}
