use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of distinct variable names.
///
/// Contexts only ever grow by appending, so an index valid in a context stays
/// valid (and names the same variable) in every extension of it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.chars().any(|c| c.is_whitespace() || c == '^' || c == '#') {
                return Err(Error::Argument(format!("invalid variable name `{n}`")));
            }
            if n == "1" {
                return Err(Error::Argument("`1` cannot be a variable name".into()));
            }
            if seen.insert(n.as_str(), i).is_some() {
                return Err(Error::Argument(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(Arc::new(VariableContext { names }))
    }

    /// `x1, …, xn`.
    pub fn numbered(prefix: &str, n: usize) -> Arc<Self> {
        Arc::new(VariableContext {
            names: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Appends the names not already present, keeping existing indices.
    pub fn extend<S: AsRef<str>>(&self, extra: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        for e in extra {
            let e = e.as_ref();
            if !names.iter().any(|n| n == e) {
                names.push(e.to_string());
            }
        }
        VariableContext::new(names)
    }

    /// True when `self` lists the first `self.len()` names of `other`.
    pub fn is_prefix_of(&self, other: &VariableContext) -> bool {
        self.names.len() <= other.names.len() && other.names[..self.names.len()] == self.names[..]
    }
}

pub(crate) fn same_context(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A monic monomial `x^α` over a [`VariableContext`].
///
/// Exponents are kept densely, one slot per variable of the context; the
/// variables with a zero slot are exactly the ones absent from the monomial.
#[derive(Clone)]
pub struct Monomial {
    ctx: Arc<VariableContext>,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(ctx: &Arc<VariableContext>) -> Self {
        Monomial {
            ctx: ctx.clone(),
            exps: vec![0; ctx.len()].into_boxed_slice(),
        }
    }

    pub fn from_exponents(ctx: &Arc<VariableContext>, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != ctx.len() {
            return Err(Error::ContextMismatch(format!(
                "exponent vector of length {} in a context of {} variables",
                exps.len(),
                ctx.len()
            )));
        }
        Ok(Monomial {
            ctx: ctx.clone(),
            exps: exps.into_boxed_slice(),
        })
    }

    pub(crate) fn from_raw(ctx: &Arc<VariableContext>, exps: Box<[u32]>) -> Self {
        debug_assert_eq!(exps.len(), ctx.len());
        Monomial {
            ctx: ctx.clone(),
            exps,
        }
    }

    /// The variable with 0-based index `i`.
    pub fn var(ctx: &Arc<VariableContext>, i: usize) -> Self {
        let mut m = Monomial::one(ctx);
        m.exps[i] = 1;
        m
    }

    /// Product of the named variables (with multiplicity).
    pub fn from_names<S: AsRef<str>>(ctx: &Arc<VariableContext>, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut m = Monomial::one(ctx);
        for n in names {
            let n = n.as_ref();
            let i = ctx
                .index_of(n)
                .ok_or_else(|| Error::Argument(format!("unknown variable `{n}`")))?;
            m.exps[i] += 1;
        }
        Ok(m)
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    /// Sparse view: `(index, exponent)` for every variable present.
    pub fn sparse(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e))
    }

    pub fn support(&self) -> Vec<usize> {
        self.sparse().map(|(i, _)| i).collect()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    fn check(&self, other: &Monomial) -> Result<()> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!("{self} vs {other}")))
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        divides(&self.exps, &other.exps)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial::from_raw(&self.ctx, mul(&self.exps, &other.exps)))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial::from_raw(&self.ctx, lcm(&self.exps, &other.exps)))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        let e = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect();
        Ok(Monomial::from_raw(&self.ctx, e))
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !same_context(&self.ctx, &other.ctx) || !other.divides(self) {
            return None;
        }
        let e = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial::from_raw(&self.ctx, e))
    }

    /// Re-expresses the monomial in an extension of its context.
    pub fn embed(&self, ctx: &Arc<VariableContext>) -> Result<Monomial> {
        if same_context(&self.ctx, ctx) {
            return Ok(self.clone());
        }
        if !self.ctx.is_prefix_of(ctx) {
            return Err(Error::ContextMismatch(format!(
                "cannot embed {self} into a context that does not extend its own"
            )));
        }
        let mut e = vec![0; ctx.len()];
        e[..self.exps.len()].copy_from_slice(&self.exps);
        Ok(Monomial::from_raw(ctx, e.into_boxed_slice()))
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps && same_context(&self.ctx, &other.ctx)
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.exps, &other.exps).then_with(|| self.ctx.names.cmp(&other.ctx.names))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, e) in self.sparse() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

// Raw exponent-vector kernels shared by the lattice and homology code.

#[inline]
pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[inline]
pub(crate) fn mul(a: &[u32], b: &[u32]) -> Box<[u32]> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[inline]
pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Box<[u32]> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Canonical monomial order: total degree first, then lexicographic with
/// `x1 > x2 > …` (larger leading exponents first).
pub(crate) fn canonical_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            match y.cmp(x) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        a.len().cmp(&b.len())
    })
}
