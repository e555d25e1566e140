//! Exact elimination kernels.
//!
//! The main path is fraction-free (Bareiss) elimination over `BigInt`, after
//! scaling each column by the lcm of its denominators. A plain rational
//! Gauss-Jordan routine is kept separately; it solves the small Padé systems
//! and re-checks rank witnesses through an independent route.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rat::Rat;

/// Outcome of fraction-free row reduction.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rank: usize,
    /// Columns holding pivots, in increasing order: the first maximal set
    /// of linearly independent columns.
    pub pivot_cols: Vec<usize>,
    /// Last pivot, which for a full-rank square matrix is its determinant
    /// up to sign.
    pub last_pivot: BigInt,
    pub swaps: usize,
}

/// Multiplies column `j` by the lcm of its denominators. Returns the integer
/// matrix and the product of the scale factors.
pub fn clear_denominators(rows: &[Vec<Rat>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let ncols = rows.first().map_or(0, Vec::len);
    let scales: Vec<BigInt> = (0..ncols)
        .map(|j| {
            rows.iter()
                .fold(BigInt::one(), |acc, r| acc.lcm(r[j].denom()))
        })
        .collect();
    let ints = rows
        .iter()
        .map(|r| {
            r.iter()
                .zip(&scales)
                .map(|(v, s)| v.numer() * (s / v.denom()))
                .collect()
        })
        .collect();
    let total = scales.iter().product();
    (ints, total)
}

/// Bareiss elimination in place. Pivots are taken as the first non-zero
/// entry at or below the current row.
pub fn bareiss(m: &mut [Vec<BigInt>]) -> Echelon {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut row = 0;
    let mut pivot_cols = Vec::new();
    let mut swaps = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if p != row {
            m.swap(p, row);
            swaps += 1;
        }
        let (top, rest) = m.split_at_mut(row + 1);
        let pivot_row = &top[row];
        let pivot = &pivot_row[col];
        for r in rest.iter_mut() {
            let factor = r[col].clone();
            for j in col + 1..ncols {
                let num = pivot * &r[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                r[j] = num / &prev;
            }
            r[col] = BigInt::zero();
        }
        prev = pivot.clone();
        pivot_cols.push(col);
        row += 1;
    }
    Echelon {
        rank: pivot_cols.len(),
        pivot_cols,
        last_pivot: prev,
        swaps,
    }
}

/// Exact determinant of a square rational matrix.
pub fn determinant(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    if n == 0 {
        return Rat::one();
    }
    let (mut ints, scale) = clear_denominators(rows);
    let ech = bareiss(&mut ints);
    if ech.rank < n {
        return Rat::zero();
    }
    let sign = if ech.swaps % 2 == 1 {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    Rat::new(sign * ech.last_pivot, scale)
}

/// Rank and the pivot columns of a rational matrix.
pub fn rank_with_pivots(rows: &[Vec<Rat>]) -> (usize, Vec<usize>) {
    if rows.is_empty() {
        return (0, Vec::new());
    }
    let (mut ints, _) = clear_denominators(rows);
    let ech = bareiss(&mut ints);
    (ech.rank, ech.pivot_cols)
}

/// Rank by ordinary rational Gaussian elimination.
pub fn rational_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        let inv = Rat::one() / &m[rank][col];
        for i in rank + 1..nrows {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] * &inv;
            for j in col..ncols {
                let d = &f * &m[rank][j];
                m[i][j] -= d;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Solves the square system `A x = b` exactly; `None` when `A` is singular.
pub fn solve(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = a.len();
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(p, col);
        b.swap(p, col);
        let inv = Rat::one() / &a[col][col];
        for j in col..n {
            a[col][j] *= &inv;
        }
        b[col] *= &inv;
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in col..n {
                let d = &f * &a[col][j];
                a[i][j] -= d;
            }
            let d = &f * &b[col];
            b[i] -= d;
        }
    }
    Some(b)
}

pub fn is_zero_matrix(rows: &[Vec<Rat>]) -> bool {
    rows.iter().flatten().all(Zero::is_zero)
}
