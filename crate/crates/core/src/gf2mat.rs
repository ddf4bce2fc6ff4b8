//! Dense GF(2) linear solving for Umkehr-table resolution.
//!
//! The systems are tiny (one per cohomological degree, sides bounded by
//! the basis of a graded piece), so this is a plain bitset Gaussian
//! elimination of the augmented system `[A | I]`.

use alloc::vec;
use alloc::vec::Vec;

fn word(bit: usize) -> (usize, u64) {
    (bit / 64, 1u64 << (bit % 64))
}

fn get(row: &[u64], bit: usize) -> bool {
    let (w, m) = word(bit);
    row[w] & m != 0
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

/// Row-reduced form of `[A | I_q]` for a q x p matrix `A` over GF(2),
/// ready to answer `A x = e_r` for any unit vector `e_r`.
pub(crate) struct PreimageSolver {
    /// p: number of unknowns (columns of A).
    p: usize,
    rows: Vec<Vec<u64>>,
    /// (row, column) of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
}

impl PreimageSolver {
    /// `columns[c][r]` is `A[r][c]`; `q` is the number of rows.
    pub(crate) fn new(columns: &[Vec<bool>], q: usize) -> Self {
        let p = columns.len();
        let width = (p + q).div_ceil(64);
        let mut rows = vec![vec![0u64; width]; q];
        for (c, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), q);
            for (r, &bit) in col.iter().enumerate() {
                if bit {
                    let (w, m) = word(c);
                    rows[r][w] |= m;
                }
            }
        }
        for (r, row) in rows.iter_mut().enumerate() {
            let (w, m) = word(p + r);
            row[w] |= m;
        }

        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..p {
            let Some(pivot) = (next_row..q).find(|&r| get(&rows[r], col)) else {
                continue;
            };
            rows.swap(next_row, pivot);
            let pivot_row = rows[next_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next_row && get(row, col) {
                    xor_into(row, &pivot_row);
                }
            }
            pivots.push((next_row, col));
            next_row += 1;
        }
        PreimageSolver { p, rows, pivots }
    }

    /// A solution of `A x = e_r`, if one exists, as the support of `x`.
    pub(crate) fn solve_unit(&self, r: usize) -> Option<Vec<usize>> {
        let rank = self.pivots.len();
        // consistency: rows with zero A-part encode left-null combinations
        for row in &self.rows[rank..] {
            if get(row, self.p + r) {
                return None;
            }
        }
        let mut support = Vec::new();
        for &(row, col) in &self.pivots {
            if get(&self.rows[row], self.p + r) {
                support.push(col);
            }
        }
        Some(support)
    }
}
