//! Exact rank kernels: sparse Gaussian elimination over a prime field, and
//! fraction-free integer elimination for small certification jobs.
//!
//! Rows are consumed as sparse `(column, value)` lists sorted by column; they
//! can be produced lazily by an iterator so large Macaulay-style matrices are
//! never materialized at once. Elimination keeps a normalized pivot row per
//! column and stops early once a requested rank bound is reached.

use crate::fp::Fp;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

/// Incremental rank accumulator over `Z/p`.
pub struct RankAccumulator {
    field: Fp,
    /// Normalized pivot row (leading value 1) per leading column.
    pivots: Vec<Option<Vec<(u32, u64)>>>,
    rank: usize,
}

impl RankAccumulator {
    pub fn new(field: Fp, ncols: usize) -> Self {
        RankAccumulator {
            field,
            pivots: alloc::vec![None; ncols],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduce a row against the current pivots and absorb it if independent.
    /// Returns true when the row added a new pivot.
    pub fn absorb(&mut self, mut row: Vec<(u32, u64)>) -> bool {
        loop {
            let Some(&(col, val)) = row.first() else {
                return false;
            };
            debug_assert!(val != 0);
            match &self.pivots[col as usize] {
                Some(pivot) => {
                    row = sparse_axpy(&self.field, &row, val, pivot);
                }
                None => {
                    let inv = self.field.inv(val).expect("leading value nonzero");
                    let normalized: Vec<(u32, u64)> = row
                        .iter()
                        .map(|&(c, v)| (c, self.field.mul(v, inv)))
                        .collect();
                    self.pivots[col as usize] = Some(normalized);
                    self.rank += 1;
                    return true;
                }
            }
        }
    }
}

/// `row - factor * pivot`, sparse merge; `pivot` is normalized.
fn sparse_axpy(
    f: &Fp,
    row: &[(u32, u64)],
    factor: u64,
    pivot: &[(u32, u64)],
) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() && j < pivot.len() {
        match row[i].0.cmp(&pivot[j].0) {
            core::cmp::Ordering::Less => {
                out.push(row[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                let v = f.neg(f.mul(factor, pivot[j].1));
                if v != 0 {
                    out.push((pivot[j].0, v));
                }
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                let v = f.sub(row[i].1, f.mul(factor, pivot[j].1));
                if v != 0 {
                    out.push((row[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&row[i..]);
    for &(c, v) in &pivot[j..] {
        let nv = f.neg(f.mul(factor, v));
        if nv != 0 {
            out.push((c, nv));
        }
    }
    out
}

/// Rank over `Z/p` of a lazily produced sparse matrix. `stop_at` bounds the
/// useful rank (e.g. `min(rows, cols)`): once reached, remaining rows are
/// skipped.
pub fn rank_mod_p<I>(field: Fp, ncols: usize, rows: I, stop_at: Option<usize>) -> usize
where
    I: IntoIterator<Item = Vec<(u32, u64)>>,
{
    let mut acc = RankAccumulator::new(field, ncols);
    let stop = stop_at.unwrap_or(ncols).min(ncols);
    for row in rows {
        if acc.rank() >= stop {
            break;
        }
        acc.absorb(row);
    }
    acc.rank()
}

/// A vanishing linear combination of the given rows over `Z/p`, as
/// `(row index, coefficient)` pairs, or `None` when the rows are
/// independent. Augmented elimination: each pivot row remembers how it was
/// formed, and the first row that reduces to zero yields its combination.
pub fn null_combination<I>(
    field: Fp,
    ncols: usize,
    rows: I,
) -> Option<Vec<(usize, u64)>>
where
    I: IntoIterator<Item = Vec<(u32, u64)>>,
{
    struct Aug {
        row: Vec<(u32, u64)>,
        combo: Vec<(usize, u64)>,
    }
    let mut pivots: Vec<Option<Aug>> = (0..ncols).map(|_| None).collect();
    for (idx, row) in rows.into_iter().enumerate() {
        let mut cur = row;
        let mut combo: Vec<(usize, u64)> = alloc::vec![(idx, 1)];
        loop {
            let Some(&(col, val)) = cur.first() else {
                return Some(combo);
            };
            match &pivots[col as usize] {
                Some(pivot) => {
                    cur = sparse_axpy(&field, &cur, val, &pivot.row);
                    combo = combo_axpy(&field, &combo, val, &pivot.combo);
                }
                None => {
                    let inv = field.inv(val).expect("leading value nonzero");
                    let row_n = cur
                        .iter()
                        .map(|&(c, v)| (c, field.mul(v, inv)))
                        .collect();
                    let combo_n = combo
                        .iter()
                        .map(|&(i, v)| (i, field.mul(v, inv)))
                        .collect();
                    pivots[col as usize] = Some(Aug {
                        row: row_n,
                        combo: combo_n,
                    });
                    break;
                }
            }
        }
    }
    None
}

/// `a - factor * b` on sparse index/value combination lists.
fn combo_axpy(
    field: &Fp,
    a: &[(usize, u64)],
    factor: u64,
    b: &[(usize, u64)],
) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                let v = field.neg(field.mul(factor, b[j].1));
                if v != 0 {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                let v = field.sub(a[i].1, field.mul(factor, b[j].1));
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for &(c, v) in &b[j..] {
        let nv = field.neg(field.mul(factor, v));
        if nv != 0 {
            out.push((c, nv));
        }
    }
    out
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Intended for certification of small matrices; the caller is responsible
/// for keeping dimensions reasonable (a few thousand columns at most).
pub fn rank_exact(ncols: usize, rows: &[Vec<(u32, BigInt)>]) -> usize {
    let nrows = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut dense = alloc::vec![BigInt::zero(); ncols];
            for (c, v) in row {
                dense[*c as usize] = v.clone();
            }
            dense
        })
        .collect();
    let mut rank = 0;
    let mut prev_pivot = BigInt::from(1);
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        // Pick the shortest-looking nonzero pivot in this column to slow
        // coefficient growth.
        let mut best: Option<usize> = None;
        for r in row..nrows {
            if !m[r][col].is_zero() {
                let better = match best {
                    None => true,
                    Some(b) => {
                        m[r][col].magnitude().bits() < m[b][col].magnitude().bits()
                    }
                };
                if better {
                    best = Some(r);
                }
            }
        }
        let Some(p) = best else { continue };
        m.swap(row, p);
        for r in row + 1..nrows {
            for c in col + 1..ncols {
                let t = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                m[r][c] = &t / &prev_pivot;
            }
            m[r][col] = BigInt::zero();
        }
        prev_pivot = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Convenience: reduce integer rows into `Z/p` rows, dropping zeros.
pub fn reduce_rows_mod_p(rows: &[Vec<(u32, BigInt)>], field: Fp) -> Vec<Vec<(u32, u64)>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .filter_map(|(c, v)| {
                    let r = crate::arith::bigint_mod_u64(v, field.modulus());
                    if r == 0 {
                        None
                    } else {
                        Some((*c, r))
                    }
                })
                .collect()
        })
        .collect()
}
