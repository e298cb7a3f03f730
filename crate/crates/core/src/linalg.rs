//! Exact row reduction over `Q`: a dense kernel for fitting and a sparse,
//! incrementally maintained reduced echelon form for relation modules.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Q;

/// Reduces `rows` in place to reduced row echelon form, pivoting on the first
/// nonzero entry of each column. Returns the pivot columns; rows past the
/// rank are left zero.
pub fn rref(rows: &mut [Vec<Q>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = Q::one() / &rows[next][col];
        for v in rows[next].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    pivots
}

/// A sparse row as `column → coefficient`.
pub type SparseRow = BTreeMap<usize, Q>;

/// Row space of a growing set of sparse relations, kept fully reduced: every
/// pivot column appears in exactly one stored row, with coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// The reduced row whose pivot is `col`.
    pub fn row(&self, col: usize) -> Option<&SparseRow> {
        self.rows.get(&col)
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Reduces `row` modulo the stored rows.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        let mut out = SparseRow::new();
        for (&c, v) in row {
            if v.is_zero() {
                continue;
            }
            match self.rows.get(&c) {
                Some(pivot_row) => {
                    for (&d, w) in pivot_row {
                        if d != c {
                            add_into(&mut out, d, -(v * w));
                        }
                    }
                }
                None => add_into(&mut out, c, v.clone()),
            }
        }
        out
    }

    /// Adds a relation; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut reduced = self.reduce(&row);
        let Some((&pivot, lead)) = reduced.iter().next() else {
            return false;
        };
        let inv = Q::one() / lead;
        for v in reduced.values_mut() {
            *v *= &inv;
        }
        for other in self.rows.values_mut() {
            if let Some(factor) = other.remove(&pivot) {
                for (&d, w) in &reduced {
                    if d != pivot {
                        add_into(other, d, -(&factor * w));
                    }
                }
            }
        }
        self.rows.insert(pivot, reduced);
        true
    }
}

fn add_into(row: &mut SparseRow, col: usize, v: Q) {
    if v.is_zero() {
        return;
    }
    let entry = row.entry(col).or_insert_with(Q::zero);
    *entry += v;
    if entry.is_zero() {
        row.remove(&col);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn dense_rank_and_form() {
        let mut m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let pivots = rref(&mut m);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m[0], vec![q(1), q(0), q(1)]);
        assert_eq!(m[1], vec![q(0), q(1), q(1)]);
        assert!(m[2].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn dense_empty() {
        let mut m: Vec<Vec<Q>> = Vec::new();
        assert!(rref(&mut m).is_empty());
    }

    #[test]
    fn sparse_matches_dense() {
        let data: &[&[i64]] = &[&[0, 1, 1, 0], &[1, 1, 0, 0], &[1, 0, -1, 0], &[0, 0, 1, 1]];
        let mut echelon = SparseEchelon::new(4);
        for r in data {
            let row: SparseRow = r
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c, q(v)))
                .collect();
            echelon.insert(row);
        }
        let mut m = dense(data);
        let pivots = rref(&mut m);
        assert_eq!(echelon.rank(), pivots.len());
        for (i, &p) in pivots.iter().enumerate() {
            let row = echelon.row(p).unwrap();
            for c in 0..4 {
                assert_eq!(row.get(&c).cloned().unwrap_or_else(Q::zero), m[i][c]);
            }
        }
        assert_eq!(echelon.free_columns(), vec![3]);
    }

    #[test]
    fn redundant_rows_do_not_grow_rank() {
        let mut e = SparseEchelon::new(3);
        assert!(e.insert([(0, q(1)), (1, q(-1))].into_iter().collect()));
        assert!(!e.insert([(0, q(2)), (1, q(-2))].into_iter().collect()));
        assert!(e.insert([(1, q(1)), (2, q(1))].into_iter().collect()));
        assert_eq!(e.rank(), 2);
        assert!(e.reduce(&[(0, q(1)), (2, q(1))].into_iter().collect()).is_empty());
    }
}
