use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideals::text::parse_monomial;
use crate::ideals::{Monomial, VariableContext};

/// Multigraded Betti numbers `β_{i,m}(I)` of an ideal over one field.
///
/// Indices follow the module convention for `I` itself: `β_0` counts the
/// minimal generators. Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldSpec,
    ctx: Arc<VariableContext>,
    entries: BTreeMap<(usize, Monomial), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    field: FieldSpec,
    total: Vec<(usize, u64)>,
    graded: Vec<(usize, u64, u64)>,
    multigraded: Vec<(usize, String, u64)>,
}

impl BettiTable {
    pub fn new(field: FieldSpec, ctx: &Arc<VariableContext>) -> Self {
        BettiTable {
            field,
            ctx: ctx.clone(),
            entries: BTreeMap::new(),
        }
    }

    /// Adds `value` to `β_{i,m}`; zero values are ignored. Addition is
    /// commutative, so assembly order never changes the table.
    pub fn add(&mut self, i: usize, m: Monomial, value: u64) {
        if value > 0 {
            *self.entries.entry((i, m)).or_insert(0) += value;
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries sorted by `i`, then by the canonical monomial order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> + '_ {
        self.entries.iter().map(|((i, m), v)| (*i, m, *v))
    }

    pub fn get(&self, i: usize, m: &Monomial) -> u64 {
        self.entries.get(&(i, m.clone())).copied().unwrap_or(0)
    }

    /// `β_{i,j}` keyed by `(i, j)`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), u64> {
        let mut out = BTreeMap::new();
        for ((i, m), v) in &self.entries {
            *out.entry((*i, m.degree() as u64)).or_insert(0) += v;
        }
        out
    }

    /// `β_i` for `i = 0..=pd`; empty for the zero ideal.
    pub fn total(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for ((i, _), v) in &self.entries {
            out[*i] += v;
        }
        out
    }

    pub fn total_at(&self, i: usize) -> u64 {
        self.total().get(i).copied().unwrap_or(0)
    }

    /// Projective dimension of `I`.
    pub fn pd(&self) -> Result<usize> {
        self.entries
            .keys()
            .map(|(i, _)| *i)
            .max()
            .ok_or(Error::UndefinedInvariant("projective dimension"))
    }

    /// Castelnuovo-Mumford regularity `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn reg(&self) -> Result<i64> {
        self.entries
            .keys()
            .map(|(i, m)| m.degree() as i64 - *i as i64)
            .max()
            .ok_or(Error::UndefinedInvariant("regularity"))
    }

    /// Reindexes for `R/I`: `β_{i+1}(R/I) = β_i(I)` plus `β_0(R/I) = 1`
    /// in degree 0. Only meaningful for display and cross-checks.
    pub fn quotient_shifted(&self) -> BettiTable {
        let mut t = BettiTable::new(self.field, &self.ctx);
        if !self.is_empty() {
            t.add(0, Monomial::one(&self.ctx), 1);
        }
        for ((i, m), v) in &self.entries {
            t.add(i + 1, m.clone(), *v);
        }
        t
    }

    fn json_repr(&self) -> BettiJson {
        BettiJson {
            field: self.field,
            total: self.total().into_iter().enumerate().collect(),
            graded: self.graded().into_iter().map(|((i, j), v)| (i, j, v)).collect(),
            multigraded: self
                .entries
                .iter()
                .map(|((i, m), v)| (*i, m.to_string(), *v))
                .collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.json_repr()).expect("table serialises")
    }

    /// Compact JSON: `{"field","total","graded","multigraded"}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_repr()).expect("table serialises")
    }

    /// Reads [`Self::to_json`] output back, resolving monomials in `ctx`.
    pub fn from_json(text: &str, ctx: &Arc<VariableContext>) -> Result<Self> {
        let raw: BettiJson = serde_json::from_str(text)?;
        let mut t = BettiTable::new(raw.field, ctx);
        for (i, m, v) in raw.multigraded {
            t.add(i, parse_monomial(ctx, &m)?, v);
        }
        Ok(t)
    }

    /// Human-readable rendering, stable across runs.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "field: {}", self.field);
        let total: Vec<String> = self.total().iter().map(u64::to_string).collect();
        let _ = writeln!(s, "total: {}", total.join(" "));
        match (self.pd(), self.reg()) {
            (Ok(pd), Ok(reg)) => {
                let _ = writeln!(s, "pd: {pd}\nreg: {reg}");
            }
            _ => s.push_str("pd: undefined\nreg: undefined\n"),
        }
        s.push_str("graded:\n");
        for ((i, j), v) in self.graded() {
            let _ = writeln!(s, "  {i} {j} {v}");
        }
        s
    }
}
