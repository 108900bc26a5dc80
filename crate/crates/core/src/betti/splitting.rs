use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::compute::{betti_tables, BettiOptions};
use super::table::BettiTable;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideals::{power_guarded, same_context, Monomial, MonomialIdeal};

/// Outcome of testing `β_i(I) = β_i(J) + β_i(K) + β_{i-1}(J ∩ K)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    pub field: FieldSpec,
    /// `lhs - rhs` for each total index `i`.
    pub discrepancy: Vec<i64>,
    /// Multidegrees where the multigraded identity fails: `(i, m, lhs - rhs)`.
    pub multigraded_mismatches: Vec<(usize, String, i64)>,
    pub holds: bool,
    pub multigraded_holds: bool,
}

/// Checks whether `I = J + K` is a Betti splitting over `field`. The
/// generators of `I` must be the disjoint union of those of `J` and `K`.
pub fn check_splitting(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    field: FieldSpec,
    opts: &BettiOptions,
) -> Result<SplittingReport> {
    if !same_context(i.context(), j.context()) || !same_context(i.context(), k.context()) {
        return Err(Error::ContextMismatch("splitting needs one ring".into()));
    }
    let gi: BTreeSet<&Monomial> = i.generators().iter().collect();
    let gj: BTreeSet<&Monomial> = j.generators().iter().collect();
    let gk: BTreeSet<&Monomial> = k.generators().iter().collect();
    if !gj.is_disjoint(&gk) {
        return Err(Error::PartitionViolated("G(J) and G(K) share a generator".into()));
    }
    let union: BTreeSet<&Monomial> = gj.union(&gk).copied().collect();
    if union != gi {
        return Err(Error::PartitionViolated("G(J) ∪ G(K) differs from G(I)".into()));
    }
    let jk = j.intersect(k)?;
    let table = |x: &MonomialIdeal| -> Result<BettiTable> { Ok(betti_tables(x, &[field], opts)?.remove(0)) };
    let (ti, tj, tk, tjk) = (table(i)?, table(j)?, table(k)?, table(&jk)?);

    let len = [ti.total().len(), tj.total().len(), tk.total().len(), tjk.total().len() + 1]
        .into_iter()
        .max()
        .unwrap_or(0);
    let discrepancy: Vec<i64> = (0..len)
        .map(|n| {
            let prev = if n == 0 { 0 } else { tjk.total_at(n - 1) };
            ti.total_at(n) as i64 - (tj.total_at(n) + tk.total_at(n) + prev) as i64
        })
        .collect();

    let mut diff: BTreeMap<(usize, Monomial), i64> = BTreeMap::new();
    for (n, m, v) in ti.entries() {
        *diff.entry((n, m.clone())).or_default() += v as i64;
    }
    for t in [&tj, &tk] {
        for (n, m, v) in t.entries() {
            *diff.entry((n, m.clone())).or_default() -= v as i64;
        }
    }
    for (n, m, v) in tjk.entries() {
        *diff.entry((n + 1, m.clone())).or_default() -= v as i64;
    }
    let multigraded_mismatches: Vec<(usize, String, i64)> = diff
        .into_iter()
        .filter(|(_, v)| *v != 0)
        .map(|((n, m), v)| (n, m.to_string(), v))
        .collect();
    Ok(SplittingReport {
        field,
        holds: discrepancy.iter().all(|&d| d == 0),
        multigraded_holds: multigraded_mismatches.is_empty(),
        discrepancy,
        multigraded_mismatches,
    })
}

/// Right-hand side of the power formula for `(I + (w))^h`, `w` a monomial in
/// new variables:
/// `β_0 = Σ_{ℓ≤h} β_0(I^ℓ) + 1` and `β_i = Σ_{ℓ≤h} [β_i(I^ℓ) + β_{i-1}(I^ℓ)]`.
/// Only the tables of `I, I², …, I^h` are computed.
pub fn formula_rhs(ideal: &MonomialIdeal, h: u32, field: FieldSpec, opts: &BettiOptions) -> Result<Vec<u64>> {
    if h == 0 {
        return Err(Error::Argument("the power formula needs h >= 1".into()));
    }
    let mut sums: Vec<u64> = Vec::new();
    for l in 1..=h {
        let p = power_guarded(ideal, l, opts.guards.max_generators)?;
        let t = betti_tables(&p, &[field], opts)?.remove(0).total();
        if sums.len() < t.len() + 1 {
            sums.resize(t.len() + 1, 0);
        }
        for (i, &v) in t.iter().enumerate() {
            sums[i] += v;
            sums[i + 1] += v;
        }
    }
    if sums.is_empty() {
        sums.push(0);
    }
    // β_0 gets +1 for w itself instead of a β_{-1} term
    sums[0] += 1;
    while sums.len() > 1 && sums.last() == Some(&0) {
        sums.pop();
    }
    Ok(sums)
}

/// Formula versus direct computation of `(I + (w))^h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaComparison {
    pub field: FieldSpec,
    pub h: u32,
    pub formula: Vec<u64>,
    pub direct: Vec<u64>,
    pub equal: bool,
}

/// Evaluates [`formula_rhs`] and the total Betti numbers of `(I + (w))^h`
/// computed directly. `w` must avoid the support of `I`.
pub fn formula_check(
    ideal: &MonomialIdeal,
    w: &Monomial,
    h: u32,
    field: FieldSpec,
    opts: &BettiOptions,
) -> Result<FormulaComparison> {
    let big = ideal.add_disjoint_monomial(w)?;
    let formula = formula_rhs(ideal, h, field, opts)?;
    let p = power_guarded(&big, h, opts.guards.max_generators)?;
    let direct = betti_tables(&p, &[field], opts)?.remove(0).total();
    Ok(FormulaComparison {
        field,
        h,
        equal: formula == direct,
        formula,
        direct,
    })
}
