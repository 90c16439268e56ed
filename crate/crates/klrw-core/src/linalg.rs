//! Exact sparse linear algebra over the rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::Q;

pub type SparseRow = BTreeMap<usize, BigRational>;

pub fn to_big(x: Q) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

/// Back to machine-size rationals; `None` when either part overflows `i64`.
pub fn from_big(x: &BigRational) -> Option<Q> {
    Some(Q::new(x.numer().to_i64()?, x.denom().to_i64()?))
}

/// A matrix stored as sparse rows of exact rationals.
#[derive(Clone, Debug, Default)]
pub struct RationalMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl RationalMatrix {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_row(&mut self, row: SparseRow) {
        debug_assert!(row.keys().all(|&c| c < self.cols));
        self.rows.push(row);
    }

    /// Adds a row given as `(column, value)` pairs, summing repeated columns.
    pub fn push_entries<I: IntoIterator<Item = (usize, Q)>>(&mut self, entries: I) {
        let mut row = SparseRow::new();
        for (c, v) in entries {
            add_into(&mut row, c, to_big(v));
        }
        self.push_row(row);
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        let mut echelon = Echelon::default();
        for row in &self.rows {
            echelon.insert(row.clone());
        }
        echelon.rank()
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut rows = vec![SparseRow::new(); self.cols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].insert(r, v.clone());
            }
        }
        RationalMatrix {
            cols: self.rows.len(),
            rows,
        }
    }

    /// Basis of `{x : x · M = 0}`, i.e. linear relations among the rows.
    pub fn left_kernel(&self) -> Vec<SparseRow> {
        self.transpose().right_kernel()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn right_kernel(&self) -> Vec<SparseRow> {
        let mut echelon = Echelon::default();
        for row in &self.rows {
            echelon.insert(row.clone());
        }
        echelon.reduce_fully();
        let pivots: BTreeMap<usize, &SparseRow> = echelon.pivots.iter().map(|(c, r)| (*c, r)).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains_key(c)) {
            let mut v = SparseRow::new();
            v.insert(free, BigRational::one());
            for (pc, prow) in &pivots {
                if let Some(x) = prow.get(&free) {
                    v.insert(*pc, -x.clone());
                }
            }
            basis.push(v);
        }
        basis
    }
}

fn add_into(row: &mut SparseRow, col: usize, v: BigRational) {
    if v.is_zero() {
        return;
    }
    let e = row.entry(col).or_insert_with(BigRational::zero);
    *e += v;
    if e.is_zero() {
        row.remove(&col);
    }
}

/// Incremental row echelon form; each stored row has leading entry 1 at its
/// pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    /// Reduces `row` against the stored pivots and returns the remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((&lead, _)) = row.iter().find(|(c, _)| self.pivots.contains_key(c)) else {
                return row;
            };
            let factor = row[&lead].clone();
            for (c, v) in &self.pivots[&lead] {
                add_into(&mut row, *c, -(&factor * v));
            }
        }
    }

    /// Inserts a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lv)) = row.iter().next() else {
            return false;
        };
        let inv = lv.recip();
        let normalized: SparseRow = row.iter().map(|(c, v)| (*c, v * &inv)).collect();
        self.pivots.insert(lead, normalized);
        true
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Clears every pivot column from the other rows.
    fn reduce_fully(&mut self) {
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for &c in cols.iter().rev() {
            let prow = self.pivots[&c].clone();
            for (&other, orow) in self.pivots.iter_mut() {
                if other == c {
                    continue;
                }
                if let Some(f) = orow.get(&c).cloned() {
                    for (k, v) in &prow {
                        add_into(orow, *k, -(&f * v));
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn matrix(cols: usize, rows: &[&[i64]]) -> RationalMatrix {
        let mut m = RationalMatrix::new(cols);
        for r in rows {
            m.push_entries(r.iter().enumerate().map(|(c, v)| (c, q(*v))));
        }
        m
    }

    #[test]
    fn rank_examples() {
        assert_eq!(matrix(3, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]).rank(), 2);
        assert_eq!(matrix(2, &[&[0, 0]]).rank(), 0);
        assert_eq!(matrix(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).rank(), 3);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = matrix(4, &[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let ker = m.right_kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in m.rows() {
                let dot: BigRational = row
                    .iter()
                    .filter_map(|(c, x)| v.get(c).map(|y| x * y))
                    .fold(BigRational::zero(), |a, b| a + b);
                assert!(dot.is_zero());
            }
        }
        assert_eq!(m.left_kernel().len(), 0);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::default();
        let row = |v: &[i64]| -> SparseRow {
            v.iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(c, x)| (c, to_big(q(*x))))
                .collect()
        };
        assert!(e.insert(row(&[1, 1, 0])));
        assert!(e.insert(row(&[0, 1, 1])));
        assert!(e.contains(&row(&[1, 2, 1])));
        assert!(!e.contains(&row(&[1, 0, 0])));
        assert!(!e.insert(row(&[2, 3, 1])));
    }
}
