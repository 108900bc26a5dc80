use serde::Serialize;

use crate::betti::{betti_tables, BettiOptions};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideals::{power_guarded, Monomial, MonomialIdeal};

/// One checked instance of a lower bound on `β^{𝔽_p} - β^ℚ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub p: u64,
    pub h: u32,
    pub i: usize,
    /// Shift `a` of the homological index (second bound only).
    pub a: Option<usize>,
    /// Observed `β^{𝔽_p}_i - β^ℚ_i`.
    pub observed: i64,
    pub bound: i64,
    pub margin: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound: &'static str,
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn min_margin(&self) -> Option<i64> {
        self.rows.iter().map(|r| r.margin).min()
    }
}

/// Total Betti vectors of `I^h` for `h = 1..=H` over ℚ and `𝔽_p`.
fn totals(ideal: &MonomialIdeal, p: u64, max_power: u32, opts: &BettiOptions) -> Result<Vec<(Vec<u64>, Vec<u64>)>> {
    let fp = FieldSpec::prime(p)?;
    (1..=max_power)
        .map(|h| {
            let pw = power_guarded(ideal, h, opts.guards.max_generators)?;
            let mut t = betti_tables(&pw, &[FieldSpec::Rationals, fp], opts)?;
            let f = t.pop().expect("two tables").total();
            Ok((t.pop().expect("two tables").total(), f))
        })
        .collect()
}

fn diff(pair: &(Vec<u64>, Vec<u64>), i: usize) -> i64 {
    let get = |v: &Vec<u64>| v.get(i).copied().unwrap_or(0) as i64;
    get(&pair.1) - get(&pair.0)
}

fn finish(bound: &'static str, rows: Vec<BoundRow>) -> Result<BoundReport> {
    if let Some(bad) = rows.iter().find(|r| r.margin < 0) {
        return Err(Error::BoundViolation(format!(
            "{bound}: p={} h={} i={} observed {} < {}",
            bad.p, bad.h, bad.i, bad.observed, bad.bound
        )));
    }
    Ok(BoundReport { bound, rows })
}

/// For `J = I + (w)`, `w` in variables outside `supp I`:
/// `β^{𝔽_p}_i(J^q) - β^ℚ_i(J^q) ≥ |{s ≤ q : β^{𝔽_p}_i(I^s) ≠ β^ℚ_i(I^s)}|`
/// for every `q ≤ H`. A violated instance is an engine bug and is returned
/// as [`Error::BoundViolation`].
pub fn check_spreading_bound(
    ideal: &MonomialIdeal,
    w: &Monomial,
    primes: &[u64],
    max_power: u32,
    opts: &BettiOptions,
) -> Result<BoundReport> {
    let j = ideal.add_disjoint_monomial(w)?;
    let mut rows = Vec::new();
    for &p in primes {
        let base = totals(ideal, p, max_power, opts)?;
        let big = totals(&j, p, max_power, opts)?;
        for q in 1..=max_power as usize {
            let len = big[q - 1].0.len().max(big[q - 1].1.len());
            for i in 0..len {
                let b = (0..q).filter(|&s| diff(&base[s], i) != 0).count() as i64;
                let observed = diff(&big[q - 1], i);
                rows.push(BoundRow {
                    p,
                    h: q as u32,
                    i,
                    a: None,
                    observed,
                    bound: b,
                    margin: observed - b,
                });
            }
        }
    }
    finish("spreading", rows)
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128) as i64
}

/// For `J = I + (y_1, …, y_{r+1})` in fresh variables: whenever
/// `β^{𝔽_p}_i(I^ℓ) ≠ β^ℚ_i(I^ℓ)` for all `ℓ ≤ h`, then
/// `β^{𝔽_p}_{i+a}(J^h) - β^ℚ_{i+a}(J^h) ≥ C(h + r, r + 1)` for `0 ≤ a ≤ r`.
/// Checks every `(p, h ≤ H, i)` meeting the hypothesis.
pub fn check_variable_spreading_bound(
    ideal: &MonomialIdeal,
    r: usize,
    primes: &[u64],
    max_power: u32,
    opts: &BettiOptions,
) -> Result<BoundReport> {
    let ctx = ideal.context();
    let fresh: Vec<String> = (1..)
        .map(|k| format!("y{k}"))
        .filter(|n| ctx.index_of(n).is_none())
        .take(r + 1)
        .collect();
    let big_ctx = ctx.extend(&fresh)?;
    let mut j = ideal.embed(&big_ctx)?;
    for name in &fresh {
        j = j.add_disjoint_monomial(&Monomial::from_names(&big_ctx, [name])?)?;
    }
    let mut rows = Vec::new();
    for &p in primes {
        let base = totals(ideal, p, max_power, opts)?;
        let big = totals(&j, p, max_power, opts)?;
        for h in 1..=max_power as usize {
            let len = base[..h].iter().map(|t| t.0.len().max(t.1.len())).max().unwrap_or(0);
            for i in 0..len {
                if (0..h).any(|l| diff(&base[l], i) == 0) {
                    continue;
                }
                for a in 0..=r {
                    let observed = diff(&big[h - 1], i + a);
                    let bound = binomial((h + r) as u64, (r + 1) as u64);
                    rows.push(BoundRow {
                        p,
                        h: h as u32,
                        i,
                        a: Some(a),
                        observed,
                        bound,
                        margin: observed - bound,
                    });
                }
            }
        }
    }
    finish("variable-spreading", rows)
}
