use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SparseIntMatrix;
use crate::error::{Error, Result};

/// Rank over 𝔽_p (`p` must be prime; not re-checked here).
pub fn rank_mod_p(m: &SparseIntMatrix, p: u64) -> usize {
    if m.is_zero() {
        return 0;
    }
    if p == 2 {
        return rank_f2(m);
    }
    let p = p as u128;
    let reduce = |v: i64| -> u64 { (v as i128).rem_euclid(p as i128) as u64 };
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.nrows()];
    let mut pivots: Vec<Vec<(u32, u64)>> = Vec::new();
    let mut rank = 0;
    let mut scratch = Vec::new();
    for col in m.columns() {
        let mut cur: Vec<(u32, u64)> = col
            .iter()
            .map(|&(r, v)| (r, reduce(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(r, a)) = cur.last() {
            match pivot_of_row[r as usize] {
                None => {
                    // normalise so the pivot entry is 1
                    let inv = mod_inverse(a, p as u64);
                    for e in cur.iter_mut() {
                        e.1 = ((e.1 as u128 * inv as u128) % p) as u64;
                    }
                    pivot_of_row[r as usize] = Some(pivots.len());
                    pivots.push(cur);
                    rank += 1;
                    break;
                }
                Some(k) => {
                    // cur -= a * pivot  (pivot has leading entry 1)
                    let piv = &pivots[k];
                    let factor = a as u128;
                    scratch.clear();
                    let (mut i, mut j) = (0, 0);
                    while i < cur.len() || j < piv.len() {
                        let take_cur = j >= piv.len() || (i < cur.len() && cur[i].0 < piv[j].0);
                        let take_piv = i >= cur.len() || (j < piv.len() && piv[j].0 < cur[i].0);
                        if take_cur {
                            scratch.push(cur[i]);
                            i += 1;
                        } else if take_piv {
                            let v = (p - (piv[j].1 as u128 * factor) % p) % p;
                            if v != 0 {
                                scratch.push((piv[j].0, v as u64));
                            }
                            j += 1;
                        } else {
                            let v = (cur[i].1 as u128 + p - (piv[j].1 as u128 * factor) % p) % p;
                            if v != 0 {
                                scratch.push((cur[i].0, v as u64));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    std::mem::swap(&mut cur, &mut scratch);
                }
            }
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (g, x, _) = extended_gcd(a as i128, p as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(p as i128) as u64
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// 𝔽₂ elimination on packed bit columns.
fn rank_f2(m: &SparseIntMatrix) -> usize {
    let words = m.nrows().div_ceil(64);
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.nrows()];
    let mut pivots: Vec<Vec<u64>> = Vec::new();
    let mut rank = 0;
    for col in m.columns() {
        let mut bits = vec![0u64; words];
        for &(r, v) in col {
            if v & 1 == 1 {
                bits[r as usize / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(top) = highest_bit(&bits) {
            match pivot_of_row[top] {
                None => {
                    pivot_of_row[top] = Some(pivots.len());
                    pivots.push(bits);
                    rank += 1;
                    break;
                }
                Some(k) => {
                    let upto = top / 64 + 1;
                    for (a, b) in bits[..upto].iter_mut().zip(&pivots[k][..upto]) {
                        *a ^= b;
                    }
                }
            }
        }
    }
    rank
}

fn highest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

/// Integer coefficient arithmetic used by fraction-free elimination.
/// Operations return `None` on overflow; arbitrary precision never does.
pub(crate) trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a·x − b·y`
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn bits(&self) -> u64;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn bits(&self) -> u64 {
        64 - self.unsigned_abs().leading_zeros() as u64
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn bits(&self) -> u64 {
        BigInt::bits(self)
    }
}

pub(crate) enum ElimError {
    Overflow,
    TooWide(u64),
}

/// Rank over ℚ by fraction-free column reduction with exact integers.
///
/// Each reduced column is divided by the gcd of its entries, which leaves
/// its ℚ-span unchanged and keeps entries small.
pub fn rank_rational(m: &SparseIntMatrix, max_bits: u64) -> Result<usize> {
    if m.is_zero() {
        return Ok(0);
    }
    match rank_fraction_free::<i64>(m, max_bits) {
        Ok(r) => Ok(r),
        Err(ElimError::Overflow) => match rank_fraction_free::<BigInt>(m, max_bits) {
            Ok(r) => Ok(r),
            Err(ElimError::TooWide(b)) => Err(too_wide(b, max_bits)),
            Err(ElimError::Overflow) => unreachable!("arbitrary precision cannot overflow"),
        },
        Err(ElimError::TooWide(b)) => Err(too_wide(b, max_bits)),
    }
}

pub(crate) fn too_wide(bits: u64, max_bits: u64) -> Error {
    Error::Resource(format!("matrix entry grew to {bits} bits (limit {max_bits})"))
}

fn rank_fraction_free<C: Coeff>(m: &SparseIntMatrix, max_bits: u64) -> std::result::Result<usize, ElimError> {
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.nrows()];
    let mut pivots: Vec<Vec<(u32, C)>> = Vec::new();
    let mut rank = 0;
    for col in m.columns() {
        let mut cur: Vec<(u32, C)> = col.iter().map(|&(r, v)| (r, C::from_i64(v))).collect();
        while let Some((r, a)) = cur.last().cloned() {
            match pivot_of_row[r as usize] {
                None => {
                    pivot_of_row[r as usize] = Some(pivots.len());
                    pivots.push(cur);
                    rank += 1;
                    break;
                }
                Some(k) => {
                    let piv = &pivots[k];
                    let b = piv.last().expect("pivot column is nonempty").1.clone();
                    cur = combine(&b, &cur, &a, piv, max_bits)?;
                }
            }
        }
    }
    Ok(rank)
}

/// `b·x − a·y` on sorted sparse vectors, divided by the content.
fn combine<C: Coeff>(
    b: &C,
    x: &[(u32, C)],
    a: &C,
    y: &[(u32, C)],
    max_bits: u64,
) -> std::result::Result<Vec<(u32, C)>, ElimError> {
    let zero = C::from_i64(0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, v) = if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            let v = C::mul_sub(b, &x[i].1, a, &zero).ok_or(ElimError::Overflow)?;
            i += 1;
            (x[i - 1].0, v)
        } else if i >= x.len() || y[j].0 < x[i].0 {
            let v = C::mul_sub(b, &zero, a, &y[j].1).ok_or(ElimError::Overflow)?;
            j += 1;
            (y[j - 1].0, v)
        } else {
            let v = C::mul_sub(b, &x[i].1, a, &y[j].1).ok_or(ElimError::Overflow)?;
            i += 1;
            j += 1;
            (x[i - 1].0, v)
        };
        if !v.is_zero() {
            if v.bits() > max_bits {
                return Err(ElimError::TooWide(v.bits()));
            }
            out.push((row, v));
        }
    }
    if let Some(first) = out.first() {
        let mut g = first.1.clone();
        for (_, v) in &out[1..] {
            if g.is_unit() {
                break;
            }
            g = g.gcd(v);
        }
        if !g.is_unit() {
            for e in out.iter_mut() {
                e.1 = e.1.div_exact(&g);
            }
        }
    }
    Ok(out)
}
