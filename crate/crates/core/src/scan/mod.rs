//! Characteristic-dependence experiments over powers and primes: dependence
//! reports, Kodiyalam fits, regularity profiles and lower-bound checks.
//!
//! Everything here describes a finite window `h = 1..=H`. Verdicts about the
//! asymptotic behaviour are labelled as evidence and fall back to
//! `inconclusive` whenever the window cannot support them.

mod bounds;
mod kodiyalam;
mod regularity;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub use bounds::{check_spreading_bound, check_variable_spreading_bound, BoundReport, BoundRow};
pub use kodiyalam::{fit_kodiyalam, KodiyalamFit};
pub use regularity::{estimate_linear, regularity_profile, FieldRegularity, RegularityProfile};

use crate::betti::{betti_at_multi, betti_tables, BettiOptions};
use crate::config::Guards;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideals::{power_guarded, restricted_power, Monomial, MonomialIdeal, VariableContext};

pub const REPORT_SCHEMA: &str = "report-v1";

/// A family of multidegrees `α_h` with `α_h[v] = a_v·h + b_v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeFamily(pub Vec<(u32, u32)>);

impl ProbeFamily {
    pub fn at(&self, ctx: &std::sync::Arc<VariableContext>, h: u32) -> Result<Monomial> {
        if self.0.len() != ctx.len() {
            return Err(Error::Argument(format!(
                "probe has {} entries for {} variables",
                self.0.len(),
                ctx.len()
            )));
        }
        Monomial::from_exponents(ctx, self.0.iter().map(|&(a, b)| a * h + b).collect())
    }
}

impl FromStr for ProbeFamily {
    type Err = Error;

    /// Whitespace- or comma-separated entries such as `1`, `h`, `2h`, `h+1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |t: &str| Error::Argument(format!("bad probe entry `{t}` (use c, h, kh or kh+c)"));
        let mut out = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (lin, cst) = match tok.split_once('+') {
                Some((l, c)) => (l, c.parse::<u32>().map_err(|_| bad(tok))?),
                None if tok.ends_with('h') => (tok, 0),
                None => ("", tok.parse::<u32>().map_err(|_| bad(tok))?),
            };
            let a = match lin.strip_suffix('h') {
                Some("") => 1,
                Some(k) => k.parse::<u32>().map_err(|_| bad(tok))?,
                None if lin.is_empty() => 0,
                None => return Err(bad(tok)),
            };
            out.push((a, cst));
        }
        if out.is_empty() {
            return Err(Error::Argument("empty probe".into()));
        }
        Ok(ProbeFamily(out))
    }
}

impl fmt::Display for ProbeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(a, b)| match (a, b) {
                (0, b) => b.to_string(),
                (1, 0) => "h".into(),
                (a, 0) => format!("{a}h"),
                (1, b) => format!("h+{b}"),
                (a, b) => format!("{a}h+{b}"),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Probe families shipped with the corpus ideals.
pub fn corpus_probes(name: &str) -> Option<ProbeFamily> {
    let spec = match name.replace('-', "_").as_str() {
        "klein_bottle" => "1 1 1 h h 1 1 1",
        "kty" => "h h 1 1 1 1 1 h h h",
        _ => return None,
    };
    Some(spec.parse().expect("built-in probe"))
}

/// What to scan.
#[derive(Debug, Clone)]
pub struct ScanRequest {
    pub ideal: MonomialIdeal,
    pub name: Option<String>,
    pub primes: Vec<u64>,
    pub max_power: u32,
    /// Largest homological index examined; `None` examines all.
    pub max_index: Option<usize>,
    pub probes: Vec<ProbeFamily>,
    /// Skip full tables and evaluate probes only.
    pub probes_only: bool,
}

impl ScanRequest {
    pub fn new(ideal: MonomialIdeal, primes: Vec<u64>, max_power: u32) -> Self {
        ScanRequest {
            ideal,
            name: None,
            primes,
            max_power,
            max_index: None,
            probes: Vec::new(),
            probes_only: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestRecord {
    pub ideal_sha: String,
    pub name: Option<String>,
    pub primes: Vec<u64>,
    pub max_power: u32,
    pub max_index: Option<usize>,
    pub guards: Guards,
    pub probes: Vec<String>,
    pub probes_only: bool,
}

impl RequestRecord {
    /// Content address of the request.
    pub fn sha(&self) -> String {
        let text = serde_json::to_string(self).expect("request serializes");
        hex::encode(Sha256::digest(text.as_bytes()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeValue {
    pub alpha: String,
    /// `β_{i,α}(I^h)` for `i = 0, 1, …`.
    pub betti: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub h: u32,
    pub field: FieldSpec,
    pub total_betti: Option<Vec<u64>>,
    pub probes: Vec<ProbeValue>,
    pub pd: Option<usize>,
    pub reg: Option<i64>,
    pub aborted: bool,
    pub reason: Option<String>,
}

/// `β^{𝔽_p}_i - β^ℚ_i ≥ 1` at power `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diff {
    pub h: u32,
    pub p: u64,
    pub i: usize,
    pub q_value: u64,
    pub p_value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeDiff {
    pub h: u32,
    pub p: u64,
    pub i: usize,
    pub alpha: String,
    pub q_value: u64,
    pub p_value: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Asymptotic {
    EvidenceDependent,
    EvidenceIndependent,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeVerdict {
    pub p: u64,
    pub dependent_at: Vec<u32>,
    pub independent_at: Vec<u32>,
    pub unknown_at: Vec<u32>,
    pub asymptotic: Asymptotic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub basis: String,
    pub per_prime: Vec<PrimeVerdict>,
    pub asymptotic: Asymptotic,
}

/// Result of [`scan_dependence`]; serializes to the `report-v1` layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DependenceReport {
    pub schema: &'static str,
    pub request: RequestRecord,
    pub cells: Vec<Cell>,
    pub diffs: Vec<Diff>,
    pub probe_diffs: Vec<ProbeDiff>,
    /// Fields grouped by identical sampled total Betti vectors.
    pub classes: Vec<Vec<FieldSpec>>,
    pub kodiyalam: Vec<KodiyalamFit>,
    pub regularity: RegularityProfile,
    pub verdict: Verdict,
}

impl DependenceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn cell(&self, h: u32, field: FieldSpec) -> Option<&Cell> {
        self.cells.iter().find(|c| c.h == h && c.field == field)
    }

    /// Writes `<dir>/reports/<request sha>.json` and returns the path.
    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        let sub = dir.join("reports");
        std::fs::create_dir_all(&sub).map_err(|e| Error::io(&sub, e))?;
        let path = sub.join(format!("{}.json", self.request.sha()));
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, self.to_json() + "\n").map_err(|e| Error::io(&tmp, e))?;
        std::fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

/// Path a report for `request` would be saved under.
pub fn report_path(dir: &Path, request: &RequestRecord) -> PathBuf {
    dir.join("reports").join(format!("{}.json", request.sha()))
}

fn fields_of(primes: &[u64]) -> Result<Vec<FieldSpec>> {
    let mut fields = vec![FieldSpec::Rationals];
    for &p in primes {
        let f = FieldSpec::prime(p)?;
        if !fields.contains(&f) {
            fields.push(f);
        }
    }
    Ok(fields)
}

fn aborted_cell(h: u32, field: FieldSpec, reason: &str) -> Cell {
    Cell {
        h,
        field,
        total_betti: None,
        probes: Vec::new(),
        pd: None,
        reg: None,
        aborted: true,
        reason: Some(reason.to_string()),
    }
}

fn probe_values(
    ideal: &MonomialIdeal,
    h: u32,
    families: &[ProbeFamily],
    fields: &[FieldSpec],
    guards: &Guards,
) -> Result<Vec<Vec<ProbeValue>>> {
    let mut per_field = vec![Vec::new(); fields.len()];
    for fam in families {
        let alpha = fam.at(ideal.context(), h)?;
        let local = restricted_power(ideal, h, &alpha)?;
        let vals = betti_at_multi(&local, &alpha, fields, guards)?;
        for (k, v) in vals.into_iter().enumerate() {
            per_field[k].push(ProbeValue {
                alpha: alpha.to_string(),
                betti: v,
            });
        }
    }
    Ok(per_field)
}

fn trimmed(v: &[u64], max_index: Option<usize>) -> Vec<u64> {
    let end = max_index.map_or(v.len(), |m| v.len().min(m + 1));
    v[..end].to_vec()
}

/// Compares `I^h` over ℚ and each `𝔽_p` for `h = 1..=H`.
///
/// Guard trips never fail the scan: the affected cells are marked aborted
/// and, when probe families are given, evaluated at `α_h` instead.
pub fn scan_dependence(req: &ScanRequest, opts: &BettiOptions) -> Result<DependenceReport> {
    if req.max_power == 0 {
        return Err(Error::Argument("a scan needs H >= 1".into()));
    }
    let fields = fields_of(&req.primes)?;
    let mut primes: Vec<u64> = fields.iter().skip(1).map(|f| f.characteristic()).collect();
    primes.sort_unstable();
    let record = RequestRecord {
        ideal_sha: req.ideal.digest(),
        name: req.name.clone(),
        primes: primes.clone(),
        max_power: req.max_power,
        max_index: req.max_index,
        guards: opts.guards,
        probes: req.probes.iter().map(|p| p.to_string()).collect(),
        probes_only: req.probes_only,
    };

    let mut cells = Vec::new();
    for h in 1..=req.max_power {
        if opts.progress {
            eprintln!("scan: h = {h}");
        }
        let full = if req.probes_only {
            Err(Error::Resource("full tables skipped".into()))
        } else {
            power_guarded(&req.ideal, h, opts.guards.max_generators).and_then(|p| betti_tables(&p, &fields, opts))
        };
        match full {
            Ok(tables) => {
                for t in tables {
                    let total = trimmed(&t.total(), req.max_index);
                    cells.push(Cell {
                        h,
                        field: t.field(),
                        total_betti: Some(total),
                        probes: Vec::new(),
                        pd: t.pd().ok(),
                        reg: t.reg().ok(),
                        aborted: false,
                        reason: None,
                    });
                }
            }
            Err(e) if e.is_resource() => {
                let reason = e.to_string();
                let probes = if req.probes.is_empty() {
                    None
                } else {
                    match probe_values(&req.ideal, h, &req.probes, &fields, &opts.guards) {
                        Ok(p) => Some(p),
                        Err(e) if e.is_resource() => None,
                        Err(e) => return Err(e),
                    }
                };
                for (k, &f) in fields.iter().enumerate() {
                    let mut c = aborted_cell(h, f, &reason);
                    if let Some(p) = &probes {
                        c.probes = p[k].iter().map(|v| ProbeValue {
                            alpha: v.alpha.clone(),
                            betti: trimmed(&v.betti, req.max_index),
                        }).collect();
                    }
                    cells.push(c);
                }
            }
            Err(e) => return Err(e),
        }
    }

    let diffs = collect_diffs(&cells, &primes)?;
    let probe_diffs = collect_probe_diffs(&cells, &primes)?;
    let classes = equality_classes(&cells, &fields);
    let kodiyalam = fits(&cells, &fields, req.max_power)?;
    let regularity = regularity::assemble(
        req.max_power,
        fields
            .iter()
            .map(|&f| {
                let regs = (1..=req.max_power)
                    .map(|h| cells.iter().find(|c| c.h == h && c.field == f).and_then(|c| c.reg))
                    .collect();
                regularity::field_regularity(f, regs)
            })
            .collect(),
    );
    let verdict = verdict(&cells, &diffs, &probe_diffs, &primes, req.max_power);
    Ok(DependenceReport {
        schema: REPORT_SCHEMA,
        request: record,
        cells,
        diffs,
        probe_diffs,
        classes,
        kodiyalam,
        regularity,
        verdict,
    })
}

fn uct_violation(h: u32, p: u64, i: usize, q: u64, v: u64) -> Error {
    Error::BoundViolation(format!("h={h} i={i}: F{p} value {v} below Q value {q}"))
}

fn collect_diffs(cells: &[Cell], primes: &[u64]) -> Result<Vec<Diff>> {
    let mut out = Vec::new();
    for q in cells.iter().filter(|c| c.field == FieldSpec::Rationals) {
        let Some(qt) = &q.total_betti else { continue };
        for &p in primes {
            let Some(pc) = cells.iter().find(|c| c.h == q.h && c.field == FieldSpec::Prime(p)) else { continue };
            let Some(pt) = &pc.total_betti else { continue };
            for i in 0..qt.len().max(pt.len()) {
                let (a, b) = (qt.get(i).copied().unwrap_or(0), pt.get(i).copied().unwrap_or(0));
                if b < a {
                    return Err(uct_violation(q.h, p, i, a, b));
                }
                if a != b {
                    out.push(Diff { h: q.h, p, i, q_value: a, p_value: b });
                }
            }
        }
    }
    Ok(out)
}

fn collect_probe_diffs(cells: &[Cell], primes: &[u64]) -> Result<Vec<ProbeDiff>> {
    let mut out = Vec::new();
    for q in cells.iter().filter(|c| c.field == FieldSpec::Rationals) {
        for &p in primes {
            let Some(pc) = cells.iter().find(|c| c.h == q.h && c.field == FieldSpec::Prime(p)) else { continue };
            for (qv, pv) in q.probes.iter().zip(&pc.probes) {
                for i in 0..qv.betti.len().max(pv.betti.len()) {
                    let (a, b) = (qv.betti.get(i).copied().unwrap_or(0), pv.betti.get(i).copied().unwrap_or(0));
                    if b < a {
                        return Err(uct_violation(q.h, p, i, a, b));
                    }
                    if a != b {
                        out.push(ProbeDiff {
                            h: q.h,
                            p,
                            i,
                            alpha: qv.alpha.clone(),
                            q_value: a,
                            p_value: b,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

fn equality_classes(cells: &[Cell], fields: &[FieldSpec]) -> Vec<Vec<FieldSpec>> {
    let mut groups: BTreeMap<Vec<Option<Vec<u64>>>, Vec<FieldSpec>> = BTreeMap::new();
    for &f in fields {
        let key: Vec<Option<Vec<u64>>> = cells.iter().filter(|c| c.field == f).map(|c| c.total_betti.clone()).collect();
        groups.entry(key).or_default().push(f);
    }
    let mut classes: Vec<Vec<FieldSpec>> = groups.into_values().collect();
    classes.sort();
    classes
}

fn fits(cells: &[Cell], fields: &[FieldSpec], max_power: u32) -> Result<Vec<KodiyalamFit>> {
    let mut out = Vec::new();
    if max_power < 3 {
        return Ok(out);
    }
    for &f in fields {
        let rows: Option<Vec<&Vec<u64>>> = cells
            .iter()
            .filter(|c| c.field == f)
            .map(|c| c.total_betti.as_ref())
            .collect();
        let Some(rows) = rows else { continue };
        let len = rows.iter().map(|r| r.len()).max().unwrap_or(0);
        for i in 0..len {
            let samples: Vec<(u32, i64)> = rows
                .iter()
                .enumerate()
                .map(|(k, r)| (k as u32 + 1, r.get(i).copied().unwrap_or(0) as i64))
                .collect();
            let mut fit = fit_kodiyalam(&samples, i + 1)?;
            fit.field = Some(f.to_string());
            out.push(fit);
        }
    }
    Ok(out)
}

fn verdict(cells: &[Cell], diffs: &[Diff], probe_diffs: &[ProbeDiff], primes: &[u64], max_power: u32) -> Verdict {
    let mut per_prime = Vec::new();
    for &p in primes {
        let (mut dep, mut indep, mut unknown) = (Vec::new(), Vec::new(), Vec::new());
        let mut status = Vec::new();
        for h in 1..=max_power {
            let differs = diffs.iter().any(|d| d.h == h && d.p == p) || probe_diffs.iter().any(|d| d.h == h && d.p == p);
            let complete = [FieldSpec::Rationals, FieldSpec::Prime(p)]
                .iter()
                .all(|&f| cells.iter().any(|c| c.h == h && c.field == f && c.total_betti.is_some()));
            // a probe without a difference says nothing about the full table
            let s = if differs {
                dep.push(h);
                Some(true)
            } else if complete {
                indep.push(h);
                Some(false)
            } else {
                unknown.push(h);
                None
            };
            status.push(s);
        }
        let asymptotic = trailing(&status);
        per_prime.push(PrimeVerdict {
            p,
            dependent_at: dep,
            independent_at: indep,
            unknown_at: unknown,
            asymptotic,
        });
    }
    let asymptotic = if per_prime.iter().any(|v| v.asymptotic == Asymptotic::EvidenceDependent) {
        Asymptotic::EvidenceDependent
    } else if !per_prime.is_empty() && per_prime.iter().all(|v| v.asymptotic == Asymptotic::EvidenceIndependent) {
        Asymptotic::EvidenceIndependent
    } else {
        Asymptotic::Inconclusive
    };
    Verdict {
        basis: format!("sampled powers h=1..{max_power} only; needs the last {TRAILING} powers to agree"),
        per_prime,
        asymptotic,
    }
}

const TRAILING: usize = 3;

/// Evidence label from the last [`TRAILING`] sampled powers.
fn trailing(status: &[Option<bool>]) -> Asymptotic {
    if status.len() < TRAILING {
        return Asymptotic::Inconclusive;
    }
    let tail = &status[status.len() - TRAILING..];
    if tail.iter().all(|s| *s == Some(true)) {
        Asymptotic::EvidenceDependent
    } else if tail.iter().all(|s| *s == Some(false)) {
        Asymptotic::EvidenceIndependent
    } else {
        Asymptotic::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::text::parse_ideal;

    #[test]
    fn probe_syntax() {
        let p: ProbeFamily = "1 1 1 h h 1, 2h+1 h+3".parse().unwrap();
        assert_eq!(p.0, vec![(0, 1), (0, 1), (0, 1), (1, 0), (1, 0), (0, 1), (2, 1), (1, 3)]);
        assert_eq!(p.to_string(), "1 1 1 h h 1 2h+1 h+3");
        assert!("x".parse::<ProbeFamily>().is_err());
        assert!("".parse::<ProbeFamily>().is_err());
    }

    #[test]
    fn trailing_window_rules() {
        assert_eq!(trailing(&[Some(true), Some(true)]), Asymptotic::Inconclusive);
        assert_eq!(trailing(&[Some(false), Some(true), Some(true), Some(true)]), Asymptotic::EvidenceDependent);
        assert_eq!(trailing(&[Some(false); 3]), Asymptotic::EvidenceIndependent);
        assert_eq!(trailing(&[Some(false), None, Some(false)]), Asymptotic::Inconclusive);
    }

    #[test]
    fn maximal_ideal_scan_is_independent() {
        let i = parse_ideal("x\ny\n").unwrap();
        let r = scan_dependence(&ScanRequest::new(i, vec![2, 3, 5], 4), &BettiOptions::default()).unwrap();
        assert!(r.diffs.is_empty());
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.verdict.asymptotic, Asymptotic::EvidenceIndependent);
        let f = r.kodiyalam.iter().find(|f| f.index == 1 && f.field.as_deref() == Some("Q")).unwrap();
        assert_eq!(f.coefficients.as_deref(), Some(&["1".to_string(), "1".to_string()][..]));
        let q = &r.regularity.fields[0];
        assert_eq!((q.slope, q.intercept), (Some(1), Some(0)));
    }

    #[test]
    fn guard_trip_marks_cells() {
        let i = parse_ideal("x y\ny z\nx z\n").unwrap();
        let opts = BettiOptions {
            guards: Guards {
                max_generators: 5,
                ..Guards::default()
            },
            ..Default::default()
        };
        let mut req = ScanRequest::new(i, vec![2], 2);
        req.probes = vec!["h h h".parse().unwrap()];
        let r = scan_dependence(&req, &opts).unwrap();
        let c = r.cell(2, FieldSpec::Rationals).unwrap();
        assert!(c.aborted && c.total_betti.is_none());
        assert_eq!(c.probes.len(), 1);
        assert_eq!(r.verdict.per_prime[0].unknown_at, vec![2]);
    }
}
