use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rank::too_wide;
use super::SparseIntMatrix;
use crate::error::Result;

/// Rank and nontrivial invariant factors (all `> 1`, each dividing the next).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SmithInvariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Smith normal form invariants of an integer matrix.
///
/// Unit pivots are eliminated on the sparse structure first (row operations
/// with a ±1 pivot are unimodular and never divide). Whatever remains is
/// reduced densely with smallest-absolute-value pivoting.
pub fn smith_invariants(m: &SparseIntMatrix, max_bits: u64) -> Result<SmithInvariants> {
    let mut rows: Vec<BTreeMap<u32, BigInt>> = vec![BTreeMap::new(); m.nrows()];
    let mut col_rows: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); m.ncols()];
    for (c, col) in m.columns().iter().enumerate() {
        for &(r, v) in col {
            rows[r as usize].insert(c as u32, BigInt::from(v));
            col_rows[c].insert(r);
        }
    }

    let mut diag: Vec<BigInt> = Vec::new();
    let mut live_rows: BTreeSet<u32> = (0..m.nrows() as u32).filter(|&r| !rows[r as usize].is_empty()).collect();

    loop {
        // Pick a unit entry minimising (row length - 1) * (column length - 1).
        let mut best: Option<(usize, u32, u32)> = None;
        for &r in &live_rows {
            let row = &rows[r as usize];
            for (&c, v) in row {
                if v.abs().is_one() {
                    let cost = (row.len() - 1) * (col_rows[c as usize].len() - 1);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, r, c));
                        if cost == 0 {
                            break;
                        }
                    }
                }
            }
            if best.is_some_and(|b| b.0 == 0) {
                break;
            }
        }
        let Some((_, pr, pc)) = best else { break };

        let pivot_row = std::mem::take(&mut rows[pr as usize]);
        let pv = pivot_row[&pc].clone();
        let others: Vec<u32> = col_rows[pc as usize].iter().copied().filter(|&r| r != pr).collect();
        for r in others {
            // row_r -= (v / pv) * pivot_row; pv is ±1 so v * pv is exact.
            let factor = &rows[r as usize][&pc] * &pv;
            for (&c, pval) in &pivot_row {
                let entry = rows[r as usize].entry(c).or_insert_with(BigInt::zero);
                *entry -= &factor * pval;
                if entry.is_zero() {
                    rows[r as usize].remove(&c);
                    col_rows[c as usize].remove(&r);
                } else {
                    if entry.bits() > max_bits {
                        return Err(too_wide(entry.bits(), max_bits));
                    }
                    col_rows[c as usize].insert(r);
                }
            }
            if rows[r as usize].is_empty() {
                live_rows.remove(&r);
            }
        }
        for &c in pivot_row.keys() {
            col_rows[c as usize].remove(&pr);
        }
        live_rows.remove(&pr);
        diag.push(BigInt::one());
    }

    // Dense phase on the remaining block.
    let live_cols: Vec<u32> = (0..m.ncols() as u32)
        .filter(|&c| !col_rows[c as usize].is_empty())
        .collect();
    if !live_rows.is_empty() && !live_cols.is_empty() {
        let col_pos: BTreeMap<u32, usize> = live_cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut dense: Vec<Vec<BigInt>> = live_rows
            .iter()
            .map(|&r| {
                let mut row = vec![BigInt::zero(); live_cols.len()];
                for (c, v) in &rows[r as usize] {
                    row[col_pos[c]] = v.clone();
                }
                row
            })
            .collect();
        dense_diagonal(&mut dense, &mut diag, max_bits)?;
    }

    Ok(normalise(diag))
}

fn dense_diagonal(a: &mut [Vec<BigInt>], diag: &mut Vec<BigInt>, max_bits: u64) -> Result<()> {
    let nr = a.len();
    let nc = a[0].len();
    for t in 0..nr.min(nc) {
        loop {
            // smallest nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, v) in row.iter().enumerate().skip(t) {
                    if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Ok(());
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..nc {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                    if a[i][j].bits() > max_bits {
                        return Err(too_wide(a[i][j].bits(), max_bits));
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                    if row[j].bits() > max_bits {
                        return Err(too_wide(row[j].bits(), max_bits));
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                diag.push(a[t][t].abs());
                break;
            }
        }
    }
    Ok(())
}

/// Turns an arbitrary nonzero diagonal into the divisibility chain via
/// pairwise (gcd, lcm) replacement, dropping the unit factors.
fn normalise(mut d: Vec<BigInt>) -> SmithInvariants {
    let rank = d.len();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if d[i].is_one() {
                break;
            }
            let g = d[i].gcd(&d[j]);
            if g != d[i] {
                let l = &d[i] / &g * &d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    let mut torsion: Vec<BigInt> = d.into_iter().filter(|v| !v.is_one()).collect();
    torsion.sort();
    SmithInvariants { rank, torsion }
}

impl SmithInvariants {
    /// Number of invariant factors divisible by `p`.
    pub fn torsion_count_divisible_by(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|t| (*t % &p).is_zero()).count()
    }

    /// Invariant factors as `u64` where they fit (for display).
    pub fn torsion_u64(&self) -> Vec<Option<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_MAX_ENTRY_BITS;

    fn snf(rows: &[Vec<i64>]) -> SmithInvariants {
        smith_invariants(&SparseIntMatrix::from_dense(rows), DEFAULT_MAX_ENTRY_BITS).unwrap()
    }

    #[test]
    fn diagonal_chain() {
        let s = snf(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(s.rank, 2);
        assert_eq!(s.torsion, vec![BigInt::from(6)]);

        let s = snf(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 0]]);
        assert_eq!(s.rank, 2);
        assert_eq!(s.torsion, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn mixed_unit_and_torsion() {
        // [[2,4,4],[-6,6,12],[10,-4,-16]] has SNF diag(2, 6, 12)
        let s = snf(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(s.rank, 3);
        assert_eq!(s.torsion, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);

        let s = snf(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(s.rank, 2);
        assert_eq!(s.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(snf(&[vec![0, 0]]), SmithInvariants::default());
        assert_eq!(smith_invariants(&SparseIntMatrix::zeros(0, 3), 64).unwrap().rank, 0);
    }
}
