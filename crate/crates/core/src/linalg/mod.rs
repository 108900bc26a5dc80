//! Exact sparse linear algebra over ℤ, ℚ and 𝔽_p.
//!
//! Boundary matrices are stored column-major with small integer entries.
//! Ranks over 𝔽_p use elimination mod p; ranks over ℚ use fraction-free
//! integer elimination that starts on checked `i64` and restarts on
//! arbitrary-precision integers if anything overflows. Integer invariant
//! factors come from a Smith normal form that first clears unit pivots
//! sparsely and finishes the leftover block densely.

mod rank;
mod snf;

use std::fmt::Write as _;

pub use rank::{rank_mod_p, rank_rational};
pub use snf::{smith_invariants, SmithInvariants};

/// Default cap on the bit length of any entry during exact elimination.
pub const DEFAULT_MAX_ENTRY_BITS: u64 = 4096;

/// Column-major sparse integer matrix; each column sorted by row, no zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseIntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseIntMatrix {
            nrows,
            ncols,
            cols: vec![Vec::new(); ncols],
        }
    }

    /// Builds from columns; entries are sorted and zeros dropped.
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        let ncols = cols.len();
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.retain(|&(_, v)| v != 0);
                c.sort_unstable_by_key(|&(r, _)| r);
                debug_assert!(c.iter().all(|&(r, _)| (r as usize) < nrows));
                c
            })
            .collect();
        SparseIntMatrix { nrows, ncols, cols }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut cols = vec![Vec::new(); ncols];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    cols[c].push((r as u32, v));
                }
            }
        }
        SparseIntMatrix { nrows, ncols, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn columns(&self) -> &[Vec<(u32, i64)>] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.cols[c]
            .binary_search_by_key(&(r as u32), |&(x, _)| x)
            .map_or(0, |k| self.cols[c][k].1)
    }

    /// `self · other`, or `None` if an entry overflows `i64`.
    pub fn checked_mul(&self, other: &SparseIntMatrix) -> Option<SparseIntMatrix> {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut out = Vec::with_capacity(other.ncols);
        let mut acc = vec![0i64; self.nrows];
        let mut touched = Vec::new();
        for col in &other.cols {
            for &(k, b) in col {
                for &(r, a) in &self.cols[k as usize] {
                    let slot = &mut acc[r as usize];
                    if *slot == 0 {
                        touched.push(r);
                    }
                    *slot = slot.checked_add(a.checked_mul(b)?)?;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut c = Vec::new();
            for &r in &touched {
                let v = std::mem::take(&mut acc[r as usize]);
                if v != 0 {
                    c.push((r, v));
                }
            }
            touched.clear();
            out.push(c);
        }
        Some(SparseIntMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            cols: out,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Plain-text debug export: a `rows cols` line, then one `row col value`
    /// triple per nonzero entry (0-based, column-major order).
    pub fn to_triples(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.nrows, self.ncols);
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                let _ = writeln!(s, "{r} {c} {v}");
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples_export() {
        let m = SparseIntMatrix::from_dense(&[vec![1, 0], vec![0, -2]]);
        assert_eq!(m.to_triples(), "2 2\n0 0 1\n1 1 -2\n");
        assert_eq!(m.get(1, 1), -2);
        assert_eq!(m.get(0, 1), 0);
    }

    #[test]
    fn multiplication() {
        let a = SparseIntMatrix::from_dense(&[vec![1, 1], vec![0, 1]]);
        let b = SparseIntMatrix::from_dense(&[vec![1, -1], vec![0, 1]]);
        let p = a.checked_mul(&b).unwrap();
        assert_eq!(p, SparseIntMatrix::from_dense(&[vec![1, 0], vec![0, 1]]));
    }
}
