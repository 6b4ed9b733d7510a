//! Exact sparse column elimination over the rationals.
//!
//! Columns are reduced fraction-free: `c <- a*c - b*q` followed by division by
//! the content of `c`. Coefficients run in checked `i64` and the whole matrix
//! is redone with big integers if anything overflows.

use fixedbitset::FixedBitSet;
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

/// A sparse integer matrix stored by columns; entries sorted by row, no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols.len(), other.rows);
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: std::collections::BTreeMap<u32, i64> = Default::default();
                for &(k, v) in col {
                    for &(r, w) in &self.cols[k as usize] {
                        *acc.entry(r).or_insert(0) += v * w;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        reduce(self, None).rank
    }
}

trait Coeff: Clone + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `a*x - b*y`, `None` on overflow.
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn mul(a: &Self, b: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn mul(a: &Self, b: &Self) -> Option<Self> {
        a.checked_mul(*b)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn mul(a: &Self, b: &Self) -> Option<Self> {
        Some(a * b)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

struct Overflow;

type Col<C> = Vec<(u32, C)>;

/// `a*c - b*q` merged by row.
fn combine<C: Coeff>(a: &C, c: &Col<C>, b: &C, q: &Col<C>) -> Result<Col<C>, Overflow> {
    let zero = C::from_i64(0);
    let mut out = Vec::with_capacity(c.len() + q.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < q.len() {
        let (row, v) = if j == q.len() || (i < c.len() && c[i].0 < q[j].0) {
            let v = C::lin(a, &c[i].1, b, &zero).ok_or(Overflow)?;
            i += 1;
            (c[i - 1].0, v)
        } else if i == c.len() || q[j].0 < c[i].0 {
            let v = C::lin(a, &zero, b, &q[j].1).ok_or(Overflow)?;
            j += 1;
            (q[j - 1].0, v)
        } else {
            let v = C::lin(a, &c[i].1, b, &q[j].1).ok_or(Overflow)?;
            i += 1;
            j += 1;
            (c[i - 1].0, v)
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    Ok(out)
}

fn normalize<C: Coeff>(c: &mut Col<C>) {
    if c.iter().any(|(_, v)| v.is_unit()) {
        return;
    }
    let mut g = C::from_i64(0);
    for (_, v) in c.iter() {
        g = g.gcd(v);
        if g.is_unit() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in c.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// Outcome of reducing one matrix.
#[derive(Clone, Debug, Default)]
pub struct Reduction {
    pub rank: usize,
    /// Rows that ended up as pivots (lowest nonzero entry of a reduced column).
    pub pivot_rows: Vec<u32>,
}

fn reduce_with<C: Coeff>(
    m: &SparseMatrix,
    skip: Option<&FixedBitSet>,
) -> Result<Reduction, Overflow> {
    let mut pivot_of_row: Vec<u32> = vec![u32::MAX; m.rows];
    let mut reduced: Vec<Col<C>> = Vec::new();
    let mut pivot_rows = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        if skip.is_some_and(|s| s.contains(j)) || col.is_empty() {
            continue;
        }
        let mut c: Col<C> = col.iter().map(|&(r, v)| (r, C::from_i64(v))).collect();
        while let Some((low, a)) = c.last().cloned() {
            let p = pivot_of_row[low as usize];
            if p == u32::MAX {
                break;
            }
            let q = &reduced[p as usize];
            let b = &q.last().expect("pivot column nonempty").1;
            c = if b.is_unit() {
                // c - (a/b) q with 1/b = b
                let f = C::mul(&a, b).ok_or(Overflow)?;
                combine(&C::from_i64(1), &c, &f, q)?
            } else {
                combine(b, &c, &a, q)?
            };
            normalize(&mut c);
        }
        if let Some(&(low, _)) = c.last() {
            pivot_of_row[low as usize] = reduced.len() as u32;
            pivot_rows.push(low);
            reduced.push(c);
        }
    }
    Ok(Reduction {
        rank: reduced.len(),
        pivot_rows,
    })
}

/// Reduces `m`, skipping the columns in `skip`.
pub fn reduce(m: &SparseMatrix, skip: Option<&FixedBitSet>) -> Reduction {
    match reduce_with::<i64>(m, skip) {
        Ok(r) => r,
        Err(Overflow) => match reduce_with::<BigInt>(m, skip) {
            Ok(r) => r,
            Err(Overflow) => unreachable!("big integers do not overflow"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| {
                (0..nrows)
                    .filter(|&i| rows[i][j] != 0)
                    .map(|i| (i as u32, rows[i][j]))
                    .collect()
            })
            .collect();
        SparseMatrix { rows: nrows, cols }
    }

    #[test]
    fn small_ranks() {
        assert_eq!(dense(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(dense(&[&[2, 3], &[4, 5]]).rank(), 2);
        assert_eq!(dense(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(dense(&[&[2, 0, 2], &[0, 3, 3], &[1, 1, 2]]).rank(), 2);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = 4_000_000_000i64;
        let m = dense(&[&[big, big + 1, 1], &[big + 1, big, 1], &[7, 11, 13]]);
        // determinant is nonzero
        assert_eq!(m.rank(), 3);
        let m = dense(&[&[big, 2 * big], &[big + 7, 2 * big + 14]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn skipped_columns_are_ignored() {
        let m = dense(&[&[1, 0], &[0, 1]]);
        let mut skip = FixedBitSet::with_capacity(2);
        skip.insert(1);
        assert_eq!(reduce(&m, Some(&skip)).rank, 1);
    }
}
