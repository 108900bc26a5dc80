//! Plain-text ideal format.
//!
//! ```text
//! # comment
//! vars: x1 x2 x3
//! x1 x2^2
//! x3
//! ```
//!
//! Each non-header line is one generator; `1` is the unit ideal and an empty
//! body the zero ideal. Without a `vars:` header the variables are taken in
//! order of first appearance.

use std::fmt::Write as _;
use std::sync::Arc;

use super::ideal::MonomialIdeal;
use super::monomial::{Monomial, VariableContext};
use crate::error::{Error, Result};

/// Strips a `#` comment and surrounding whitespace.
pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => line[..k].trim(),
        None => line.trim(),
    }
}

/// Splits a token `name` or `name^e` into its parts.
pub(crate) fn parse_token(tok: &str, line: usize) -> Result<(&str, u32)> {
    match tok.split_once('^') {
        None => Ok((tok, 1)),
        Some((name, e)) => {
            if name.is_empty() {
                return Err(Error::parse(line, format!("missing variable name in `{tok}`")));
            }
            if e.is_empty() || !e.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(line, format!("bad exponent in `{tok}`")));
            }
            let e: u32 = e
                .parse()
                .map_err(|_| Error::parse(line, format!("exponent out of range in `{tok}`")))?;
            if e == 0 {
                return Err(Error::parse(line, format!("exponent must be positive in `{tok}`")));
            }
            Ok((name, e))
        }
    }
}

/// Parses the ideal text format.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut header: Option<Vec<String>> = None;
    let mut body: Vec<(usize, Vec<(String, u32)>)> = Vec::new();
    let mut unit = false;
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if header.is_some() {
                return Err(Error::parse(lineno, "duplicate `vars:` header"));
            }
            if !body.is_empty() || unit {
                return Err(Error::parse(lineno, "`vars:` header must precede generators"));
            }
            header = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        if line == "1" {
            unit = true;
            continue;
        }
        let mut toks = Vec::new();
        for tok in line.split_whitespace() {
            let (name, e) = parse_token(tok, lineno)?;
            if name == "1" {
                continue;
            }
            toks.push((name.to_string(), e));
        }
        body.push((lineno, toks));
    }

    let ctx: Arc<VariableContext> = match header {
        Some(names) => VariableContext::new(names).map_err(|e| Error::parse(1, e.to_string()))?,
        None => {
            let mut names: Vec<String> = Vec::new();
            for (_, toks) in &body {
                for (n, _) in toks {
                    if !names.contains(n) {
                        names.push(n.clone());
                    }
                }
            }
            VariableContext::new(names).map_err(|e| Error::parse(1, e.to_string()))?
        }
    };

    if unit {
        return Ok(MonomialIdeal::unit(&ctx));
    }
    let mut gens = Vec::with_capacity(body.len());
    for (lineno, toks) in body {
        let mut e = vec![0u32; ctx.len()];
        for (name, k) in toks {
            let i = ctx
                .index_of(&name)
                .ok_or_else(|| Error::parse(lineno, format!("variable `{name}` not declared in header")))?;
            e[i] += k;
        }
        gens.push(Monomial::from_exponents(&ctx, e)?);
    }
    MonomialIdeal::minimalize(&ctx, gens)
}

/// Canonical serialization: header, then one generator per line.
pub fn ideal_to_text(ideal: &MonomialIdeal) -> String {
    let mut out = String::new();
    out.push_str("vars:");
    for n in ideal.context().names() {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
    for g in ideal.generators() {
        let _ = writeln!(out, "{g}");
    }
    out
}

/// Parses a monomial written in token syntax (`x1 x2^3`, or `1`).
pub fn parse_monomial(ctx: &Arc<VariableContext>, text: &str) -> Result<Monomial> {
    let mut e = vec![0u32; ctx.len()];
    for tok in text.split_whitespace() {
        let (name, k) = parse_token(tok, 1)?;
        if name == "1" {
            continue;
        }
        let i = ctx
            .index_of(name)
            .ok_or_else(|| Error::parse(1, format!("unknown variable `{name}`")))?;
        e[i] += k;
    }
    Monomial::from_exponents(ctx, e)
}

/// Parses `text` as a monomial, appending any variables it names that the
/// ideal lacks. Returns the ideal over the widened context with the monomial.
pub fn parse_monomial_extending(ideal: &MonomialIdeal, text: &str) -> Result<(MonomialIdeal, Monomial)> {
    let ctx = ideal.context();
    let mut fresh: Vec<String> = Vec::new();
    for tok in text.split_whitespace() {
        let (name, _) = parse_token(tok, 1)?;
        if name != "1" && ctx.index_of(name).is_none() && !fresh.iter().any(|f| f == name) {
            fresh.push(name.to_string());
        }
    }
    let wide = if fresh.is_empty() { ctx.clone() } else { ctx.extend(&fresh)? };
    let i = ideal.embed(&wide)?;
    let m = parse_monomial(&wide, text)?;
    Ok((i, m))
}
