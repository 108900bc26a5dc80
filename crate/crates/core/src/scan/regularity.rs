use serde::Serialize;

use crate::betti::{betti_tables, BettiOptions};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideals::{power_guarded, MonomialIdeal};

/// Trailing linear behaviour of `h ↦ reg(I^h)` over one field. All numbers
/// describe the sampled window only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldRegularity {
    pub field: FieldSpec,
    /// `reg(I^h)` for `h = 1..=H`; `None` where a guard tripped.
    pub values: Vec<Option<i64>>,
    /// Slope `a` when the last three differences agree exactly.
    pub slope: Option<i64>,
    /// Intercept `b` of the line `a·h + b` through the trailing window.
    pub intercept: Option<i64>,
    /// First `h` from which every sample lies on that line.
    pub stability_index: Option<u32>,
    /// `max(a + 1, max_{h ≤ s} reg(I^h))`.
    pub c_field: Option<i64>,
    /// Predicted `reg((I + (y^c))^h) = c·h + reg(I) - 1`, as `(c, reg(I) - 1)`.
    pub predicted_line: Option<(i64, i64)>,
}

/// Regularity of powers over several fields with empirical asymptotic
/// estimates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityProfile {
    pub label: &'static str,
    pub max_power: u32,
    pub fields: Vec<FieldRegularity>,
    /// Common `c` (maximum of the per-field values), if all are available.
    pub c: Option<i64>,
}

/// Slope, intercept and stability index from exact trailing differences.
/// Needs at least four consecutive samples ending at the last one.
pub fn estimate_linear(values: &[Option<i64>]) -> Option<(i64, i64, u32)> {
    let n = values.len();
    if n < 4 {
        return None;
    }
    let tail: Vec<i64> = values[n - 4..].iter().copied().collect::<Option<Vec<_>>>()?;
    let d: Vec<i64> = tail.windows(2).map(|w| w[1] - w[0]).collect();
    if !(d[0] == d[1] && d[1] == d[2]) {
        return None;
    }
    let a = d[0];
    let b = tail[3] - a * n as i64;
    let mut s = n as u32;
    for h in (1..=n).rev() {
        match values[h - 1] {
            Some(v) if v == a * h as i64 + b => s = h as u32,
            _ => break,
        }
    }
    Some((a, b, s))
}

pub(crate) fn field_regularity(field: FieldSpec, values: Vec<Option<i64>>) -> FieldRegularity {
    let est = estimate_linear(&values);
    let (slope, intercept, stability_index) = match est {
        Some((a, b, s)) => (Some(a), Some(b), Some(s)),
        None => (None, None, None),
    };
    let c_field = est.and_then(|(a, _, s)| {
        let head: Option<Vec<i64>> = values[..s as usize].iter().copied().collect();
        head.map(|h| h.into_iter().max().unwrap_or(i64::MIN).max(a + 1))
    });
    FieldRegularity {
        field,
        predicted_line: None,
        values,
        slope,
        intercept,
        stability_index,
        c_field,
    }
}

pub(crate) fn assemble(max_power: u32, mut fields: Vec<FieldRegularity>) -> RegularityProfile {
    let c = fields
        .iter()
        .map(|f| f.c_field)
        .collect::<Option<Vec<_>>>()
        .and_then(|v| v.into_iter().max());
    if let Some(c) = c {
        for f in &mut fields {
            if let Some(Some(r1)) = f.values.first() {
                f.predicted_line = Some((c, r1 - 1));
            }
        }
    }
    RegularityProfile {
        label: "EMPIRICAL",
        max_power,
        fields,
        c,
    }
}

/// `reg(I^h)` for `h = 1..=H` over each field, with trailing-window
/// estimates. Guard trips leave gaps rather than failing; windows shorter
/// than four powers give values only.
pub fn regularity_profile(
    ideal: &MonomialIdeal,
    fields: &[FieldSpec],
    max_power: u32,
    opts: &BettiOptions,
) -> Result<RegularityProfile> {
    if max_power == 0 {
        return Err(Error::Argument("a regularity profile needs H >= 1".into()));
    }
    let mut values: Vec<Vec<Option<i64>>> = vec![Vec::new(); fields.len()];
    for h in 1..=max_power {
        let tables = power_guarded(ideal, h, opts.guards.max_generators)
            .and_then(|p| betti_tables(&p, fields, opts));
        match tables {
            Ok(ts) => {
                for (k, t) in ts.iter().enumerate() {
                    values[k].push(Some(t.reg()?));
                }
            }
            Err(e) if e.is_resource() => values.iter_mut().for_each(|v| v.push(None)),
            Err(e) => return Err(e),
        }
    }
    let per_field = fields
        .iter()
        .zip(values)
        .map(|(&f, v)| field_regularity(f, v))
        .collect();
    Ok(assemble(max_power, per_field))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_window() {
        let v: Vec<Option<i64>> = [3, 5, 6, 8, 10, 12].iter().map(|&x| Some(x)).collect();
        assert_eq!(estimate_linear(&v), Some((2, 0, 3)));
        assert_eq!(estimate_linear(&v[..3]), None);
        let bent: Vec<Option<i64>> = [1, 2, 4, 7].iter().map(|&x| Some(x)).collect();
        assert_eq!(estimate_linear(&bent), None);
        let f = field_regularity(FieldSpec::Rationals, v);
        assert_eq!(f.c_field, Some(6));
    }
}
