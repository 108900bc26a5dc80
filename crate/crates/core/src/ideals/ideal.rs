use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use sha2::{Digest, Sha256};

use super::monomial::{self, canonical_cmp, same_context, Monomial, VariableContext};
use super::trie::DivisorTrie;
use crate::error::{Error, Result};

/// Default cap on the number of minimal generators a power may have.
pub const DEFAULT_MAX_GENERATORS: usize = 50_000;

/// A monomial ideal, stored as its unique minimal generating set in
/// canonical order (degree, then lex with `x1 > x2 > …`).
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: Arc<VariableContext>,
    gens: Vec<Monomial>,
}

/// Keeps the divisibility-minimal vectors, deduplicated and canonically
/// sorted.
pub(crate) fn minimal_vectors(mut cands: Vec<Box<[u32]>>, nvars: usize) -> Vec<Box<[u32]>> {
    cands.sort_unstable_by(|a, b| canonical_cmp(a, b));
    cands.dedup();
    let mut trie = DivisorTrie::new(nvars);
    let mut out = Vec::with_capacity(cands.len());
    for c in cands {
        // Candidates arrive by increasing degree, so any proper divisor is
        // already in the trie.
        if !trie.any_divides(&c) {
            trie.insert(&c);
            out.push(c);
        }
    }
    out
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize(ctx: &Arc<VariableContext>, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut raw = Vec::new();
        for g in gens {
            if !same_context(g.context(), ctx) {
                return Err(Error::ContextMismatch(format!(
                    "generator {g} belongs to a different variable context"
                )));
            }
            raw.push(g.exponents().into());
        }
        Ok(Self::from_raw(ctx, raw))
    }

    pub(crate) fn from_raw(ctx: &Arc<VariableContext>, raw: Vec<Box<[u32]>>) -> Self {
        let gens = minimal_vectors(raw, ctx.len())
            .into_iter()
            .map(|e| Monomial::from_raw(ctx, e))
            .collect();
        MonomialIdeal { ctx: ctx.clone(), gens }
    }

    /// Builds from already-minimal generators in canonical order.
    pub(crate) fn from_minimal_unchecked(ctx: &Arc<VariableContext>, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ctx: ctx.clone(), gens }
    }

    pub fn zero(ctx: &Arc<VariableContext>) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &Arc<VariableContext>) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: vec![Monomial::one(ctx)],
        }
    }

    /// Convenience constructor from generator name lists, e.g.
    /// `&[&["x", "y"], &["z"]]` for `(xy, z)`.
    pub fn from_name_lists(ctx: &Arc<VariableContext>, gens: &[&[&str]]) -> Result<Self> {
        let mons = gens
            .iter()
            .map(|g| Monomial::from_names(ctx, g.iter()))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(ctx, mons)
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Whether `m` lies in the ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Least common multiple of all generators (the top of the lcm-lattice).
    pub fn lcm_of_generators(&self) -> Monomial {
        let mut e = vec![0u32; self.ctx.len()];
        for g in &self.gens {
            for (x, y) in e.iter_mut().zip(g.exponents()) {
                *x = (*x).max(*y);
            }
        }
        Monomial::from_raw(&self.ctx, e.into_boxed_slice())
    }

    /// Indices of variables dividing some generator.
    pub fn support(&self) -> Vec<usize> {
        let top = self.lcm_of_generators();
        top.support()
    }

    /// SHA-256 (hex) of the canonical text serialization.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(super::text::ideal_to_text(self).as_bytes()))
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "[{}] vs [{}]",
                self.ctx.names().join(" "),
                other.ctx.names().join(" ")
            )))
        }
    }

    /// Re-expresses the ideal in an extension of its context.
    pub fn embed(&self, ctx: &Arc<VariableContext>) -> Result<MonomialIdeal> {
        let gens = self.gens.iter().map(|g| g.embed(ctx)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::from_minimal_unchecked(ctx, gens))
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let raw = self
            .gens
            .iter()
            .chain(other.gens.iter())
            .map(|g| g.exponents().into())
            .collect();
        Ok(Self::from_raw(&self.ctx, raw))
    }

    /// `I · J`.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        self.product_guarded(other, usize::MAX)
    }

    fn product_guarded(&self, other: &MonomialIdeal, max_generators: usize) -> Result<MonomialIdeal> {
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(monomial::mul(a.exponents(), b.exponents()));
            }
        }
        let out = Self::from_raw(&self.ctx, raw);
        if out.gens.len() > max_generators {
            return Err(Error::Resource(format!(
                "product has {} minimal generators (limit {max_generators})",
                out.gens.len()
            )));
        }
        Ok(out)
    }

    /// `I ∩ J`, generated by the pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(monomial::lcm(a.exponents(), b.exponents()));
            }
        }
        Ok(Self::from_raw(&self.ctx, raw))
    }

    /// `w · I`. Multiplying by a monomial preserves minimality and order.
    pub fn scale(&self, w: &Monomial) -> Result<MonomialIdeal> {
        if !same_context(w.context(), &self.ctx) {
            return Err(Error::ContextMismatch(format!("{w} is not over the ideal's variables")));
        }
        let gens = self.gens.iter().map(|g| g.mul(w)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::from_minimal_unchecked(&self.ctx, gens))
    }

    /// `I + (w)` for a monomial `w` on variables not used by `I`.
    ///
    /// `w` may live in an extension of the ideal's context, in which case
    /// the result is expressed in that extension.
    pub fn add_disjoint_monomial(&self, w: &Monomial) -> Result<MonomialIdeal> {
        let (ctx, ideal, w) = if same_context(w.context(), &self.ctx) {
            (self.ctx.clone(), self.clone(), w.clone())
        } else if self.ctx.is_prefix_of(w.context()) {
            (w.context().clone(), self.embed(w.context())?, w.clone())
        } else if w.context().is_prefix_of(&self.ctx) {
            (self.ctx.clone(), self.clone(), w.embed(&self.ctx)?)
        } else {
            return Err(Error::ContextMismatch(format!(
                "{w} is over variables unrelated to the ideal's"
            )));
        };
        let top = ideal.lcm_of_generators();
        if w.sparse().any(|(i, _)| top.exponent(i) > 0) {
            return Err(Error::DisjointnessViolation { monomial: w.to_string() });
        }
        let raw = ideal
            .gens
            .iter()
            .map(|g| g.exponents().into())
            .chain(std::iter::once(w.exponents().into()))
            .collect();
        Ok(Self::from_raw(&ctx, raw))
    }

    /// Sub-ideal generated by the generators dividing `m`.
    pub fn restrict(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if !same_context(m.context(), &self.ctx) {
            return Err(Error::ContextMismatch(format!("{m} is not over the ideal's variables")));
        }
        let gens = self.gens.iter().filter(|g| g.divides(m)).cloned().collect();
        Ok(MonomialIdeal::from_minimal_unchecked(&self.ctx, gens))
    }

    /// Standard polarization.
    ///
    /// `x_i^e` becomes `x<i>_1 ⋯ x<i>_e`. The result lives over the fresh
    /// variables only, ordered by `(i, j)`, with `x<i>_j` present for
    /// `j` up to the largest exponent of `x_i` among the generators.
    pub fn polarize(&self) -> MonomialIdeal {
        let top = self.lcm_of_generators();
        let mut names = Vec::new();
        let mut offset = vec![0usize; self.ctx.len()];
        for i in 0..self.ctx.len() {
            offset[i] = names.len();
            for j in 1..=top.exponent(i) {
                names.push(format!("x{}_{}", i + 1, j));
            }
        }
        let ctx = VariableContext::new(names).expect("polarization names are distinct");
        let raw = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u32; ctx.len()];
                for (i, k) in g.sparse() {
                    for j in 0..k as usize {
                        e[offset[i] + j] = 1;
                    }
                }
                e.into_boxed_slice()
            })
            .collect();
        Self::from_raw(&ctx, raw)
    }

    /// Drops variables that divide no generator.
    pub fn trim_context(&self) -> MonomialIdeal {
        let used = self.support();
        let ctx = VariableContext::new(used.iter().map(|&i| self.ctx.name(i).to_string()))
            .expect("subset of distinct names");
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let e: Box<[u32]> = used.iter().map(|&i| g.exponent(i)).collect();
                Monomial::from_raw(&ctx, e)
            })
            .collect();
        MonomialIdeal::from_minimal_unchecked(&ctx, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.to_string().replace(' ', "*"))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

type PowerKey = (String, u32);

fn power_cache() -> &'static RwLock<HashMap<PowerKey, MonomialIdeal>> {
    static CACHE: OnceLock<RwLock<HashMap<PowerKey, MonomialIdeal>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `I^h` with the default generator guard.
pub fn power(ideal: &MonomialIdeal, h: u32) -> Result<MonomialIdeal> {
    power_guarded(ideal, h, DEFAULT_MAX_GENERATORS)
}

/// `I^h`, computed as `minimalize(I^(h-1) · I)` step by step.
///
/// Results are memoised per `(I, h)` for the whole process. Concurrent
/// callers may race to fill a slot; they all compute the same value.
pub fn power_guarded(ideal: &MonomialIdeal, h: u32, max_generators: usize) -> Result<MonomialIdeal> {
    if h == 0 {
        return Ok(MonomialIdeal::unit(&ideal.ctx));
    }
    if h == 1 || ideal.is_zero() || ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let key = ideal.digest();
    let lookup = |k: u32| {
        power_cache()
            .read()
            .expect("power cache poisoned")
            .get(&(key.clone(), k))
            .filter(|p| same_context(p.context(), &ideal.ctx))
            .cloned()
    };
    // cached powers obey the same guard as computed ones
    let check = |p: MonomialIdeal| {
        if p.gens.len() > max_generators {
            return Err(Error::Resource(format!(
                "product has {} minimal generators (limit {max_generators})",
                p.gens.len()
            )));
        }
        Ok(p)
    };
    if let Some(p) = lookup(h) {
        return check(p);
    }
    let mut start = 1;
    let mut acc = ideal.clone();
    for k in (2..h).rev() {
        if let Some(p) = lookup(k) {
            start = k;
            acc = check(p)?;
            break;
        }
    }
    for k in start + 1..=h {
        acc = acc.product_guarded(ideal, max_generators)?;
        power_cache()
            .write()
            .expect("power cache poisoned")
            .insert((key.clone(), k), acc.clone());
    }
    Ok(acc)
}

/// `restrict(I^h, m)` without materialising all of `I^h`: only products of
/// generators dividing `m` can divide `m`.
pub fn restricted_power(ideal: &MonomialIdeal, h: u32, m: &Monomial) -> Result<MonomialIdeal> {
    if !same_context(m.context(), &ideal.ctx) {
        return Err(Error::ContextMismatch(format!("{m} is not over the ideal's variables")));
    }
    if h == 0 {
        return MonomialIdeal::unit(&ideal.ctx).restrict(m);
    }
    let base = ideal.restrict(m)?;
    let mut acc = base.clone();
    for _ in 1..h {
        let mut raw = Vec::new();
        for a in &acc.gens {
            for b in &base.gens {
                let p = monomial::mul(a.exponents(), b.exponents());
                if monomial::divides(&p, m.exponents()) {
                    raw.push(p);
                }
            }
        }
        acc = MonomialIdeal::from_raw(&ideal.ctx, raw);
    }
    Ok(acc)
}
