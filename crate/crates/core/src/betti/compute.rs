use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use super::table::BettiTable;
use crate::complexes::{complex_of_ideal, SimplicialComplex};
use crate::config::Guards;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideals::{exps_divide, exps_lcm, same_context, Monomial, MonomialIdeal};
use crate::lattice_homology::{homology_dims_multi, koszul_facets, LcmLattice};

/// Which complex is attached to a multidegree `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Route {
    /// Upper Koszul complex `K^m(I)` on the support of `m`.
    #[default]
    Koszul,
    /// Order complex of the open interval `(1, m)` of the lcm-lattice.
    LatticeInterval,
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "koszul" => Ok(Route::Koszul),
            "lattice" | "interval" => Ok(Route::LatticeInterval),
            _ => Err(Error::Argument(format!("unknown route `{s}` (koszul or lattice)"))),
        }
    }
}

/// Knobs for table computations.
#[derive(Debug, Clone, Default)]
pub struct BettiOptions {
    pub guards: Guards,
    pub route: Route,
    /// Directory for persisted tables; `None` keeps results in memory only.
    pub cache_dir: Option<PathBuf>,
    /// Skip every cache (used when comparing routes).
    pub no_cache: bool,
    /// Report progress on stderr.
    pub progress: bool,
}

type CacheKey = (String, FieldSpec, Route);

fn memory_cache() -> &'static RwLock<HashMap<CacheKey, Arc<BettiTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<BettiTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn disk_path(dir: &Path, digest: &str, field: FieldSpec) -> PathBuf {
    dir.join("betti-v1").join(format!("{digest}-{field}.json"))
}

fn load_disk(dir: &Path, ideal: &MonomialIdeal, digest: &str, field: FieldSpec) -> Option<BettiTable> {
    let text = std::fs::read_to_string(disk_path(dir, digest, field)).ok()?;
    let t = BettiTable::from_json(&text, ideal.context()).ok()?;
    (t.field() == field).then_some(t)
}

fn store_disk(dir: &Path, digest: &str, table: &BettiTable) -> Result<()> {
    let path = disk_path(dir, digest, table.field());
    let parent = path.parent().expect("cache path has a parent");
    std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    // write-then-rename keeps concurrent readers from seeing partial files
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, table.to_json()).map_err(|e| Error::io(&tmp, e))?;
    std::fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))
}

/// Full multigraded table over one field with default options.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    Ok(betti_tables(ideal, &[field], &BettiOptions::default())?.remove(0))
}

/// Full multigraded tables over several fields. The lattice and the
/// complexes are shared between fields; results are cached by the SHA-256
/// of the ideal's canonical text plus the field.
pub fn betti_tables(ideal: &MonomialIdeal, fields: &[FieldSpec], opts: &BettiOptions) -> Result<Vec<BettiTable>> {
    for f in fields {
        f.validate()?;
    }
    let digest = ideal.digest();
    let mut found: Vec<Option<BettiTable>> = vec![None; fields.len()];
    if !opts.no_cache {
        let cache = memory_cache().read().expect("cache lock");
        for (k, &f) in fields.iter().enumerate() {
            if let Some(t) = cache.get(&(digest.clone(), f, opts.route)) {
                found[k] = Some((**t).clone());
            }
        }
        drop(cache);
        if let (Some(dir), Route::Koszul) = (&opts.cache_dir, opts.route) {
            for (k, &f) in fields.iter().enumerate() {
                if found[k].is_none() {
                    found[k] = load_disk(dir, ideal, &digest, f);
                }
            }
        }
    }
    let missing: Vec<FieldSpec> = fields
        .iter()
        .zip(&found)
        .filter(|(_, t)| t.is_none())
        .map(|(f, _)| *f)
        .collect();
    if !missing.is_empty() {
        let computed = compute_tables(ideal, &missing, opts)?;
        for t in computed {
            if !opts.no_cache {
                if let (Some(dir), Route::Koszul) = (&opts.cache_dir, opts.route) {
                    store_disk(dir, &digest, &t)?;
                }
                memory_cache()
                    .write()
                    .expect("cache lock")
                    .insert((digest.clone(), t.field(), opts.route), Arc::new(t.clone()));
            }
            for (k, f) in fields.iter().enumerate() {
                if found[k].is_none() && *f == t.field() {
                    found[k] = Some(t.clone());
                }
            }
        }
    }
    Ok(found.into_iter().map(|t| t.expect("every field computed")).collect())
}

fn compute_tables(ideal: &MonomialIdeal, fields: &[FieldSpec], opts: &BettiOptions) -> Result<Vec<BettiTable>> {
    let ctx = ideal.context();
    let mut tables: Vec<BettiTable> = fields.iter().map(|&f| BettiTable::new(f, ctx)).collect();
    if ideal.is_zero() {
        return Ok(tables);
    }
    if ideal.is_unit() {
        for t in &mut tables {
            t.add(0, Monomial::one(ctx), 1);
        }
        return Ok(tables);
    }
    let lattice = LcmLattice::build(ideal, opts.guards.max_lattice)?;
    let elements = lattice.raw_elements();
    let done = AtomicUsize::new(0);
    let total = elements.len() - 1;
    let step = (total / 20).max(1);
    let results: Vec<(usize, Vec<Vec<usize>>)> = (1..elements.len())
        .into_par_iter()
        .map(|k| {
            let m = Monomial::from_raw(ctx, elements[k].clone());
            let complex = match opts.route {
                Route::Koszul => koszul_complex(ideal, &m)?,
                Route::LatticeInterval => lattice.open_interval(&m)?,
            };
            let h = homology_dims_multi(&complex, fields, &opts.guards)?;
            if opts.progress {
                let n = done.fetch_add(1, Ordering::Relaxed) + 1;
                if n.is_multiple_of(step) || n == total {
                    eprintln!("  betti: {n}/{total} multidegrees");
                }
            }
            Ok((k, h.into_iter().map(|r| r.dims).collect()))
        })
        .collect::<Result<_>>()?;
    for (k, per_field) in results {
        let m = Monomial::from_raw(ctx, elements[k].clone());
        for (t, dims) in tables.iter_mut().zip(per_field) {
            // dims[i] is H̃_{i-1}, which gives β_{i,m}
            for (i, &d) in dims.iter().enumerate() {
                t.add(i, m.clone(), d as u64);
            }
        }
    }
    Ok(tables)
}

fn koszul_complex(ideal: &MonomialIdeal, m: &Monomial) -> Result<SimplicialComplex> {
    let support = m.support();
    let facets = koszul_facets(ideal, m.exponents(), &support);
    SimplicialComplex::from_facets((0..support.len()).map(|k| k.to_string()), facets)
}

/// Single multigraded Betti number `β_{i,m}(I)`; zero off the lattice.
pub fn betti_at(ideal: &MonomialIdeal, m: &Monomial, i: usize, field: FieldSpec) -> Result<u64> {
    Ok(betti_at_multi(ideal, m, &[field], &Guards::default())?
        .remove(0)
        .get(i)
        .copied()
        .unwrap_or(0))
}

/// `β_{•,m}(I)` over several fields: entry `[f][i]` is `β_{i,m}` over
/// `fields[f]`. Only the generators dividing `m` are ever looked at.
pub fn betti_at_multi(
    ideal: &MonomialIdeal,
    m: &Monomial,
    fields: &[FieldSpec],
    guards: &Guards,
) -> Result<Vec<Vec<u64>>> {
    for f in fields {
        f.validate()?;
    }
    if !same_context(ideal.context(), m.context()) {
        return Err(Error::ContextMismatch(format!("{m} is not over the ring of the ideal")));
    }
    let below: Vec<&Monomial> = ideal.generators().iter().filter(|g| g.divides(m)).collect();
    let join = below
        .iter()
        .fold(vec![0u32; m.exponents().len()].into_boxed_slice(), |acc, g| exps_lcm(&acc, g.exponents()));
    if below.is_empty() || &*join != m.exponents() {
        return Ok(vec![Vec::new(); fields.len()]);
    }
    let complex = koszul_complex(ideal, m)?;
    let h = homology_dims_multi(&complex, fields, guards)?;
    Ok(h.into_iter().map(|r| r.dims.into_iter().map(|d| d as u64).collect()).collect())
}

/// Betti numbers by Hochster's formula
/// `β_{i,σ}(I_Δ) = dim H̃_{|σ|-i-2}(Δ|_σ)`, summing over all vertex subsets.
/// Independent of the lcm-lattice; used as a cross-check.
pub fn hochster_betti(ideal: &MonomialIdeal, field: FieldSpec, guards: &Guards) -> Result<BettiTable> {
    field.validate()?;
    let ctx = ideal.context();
    let mut table = BettiTable::new(field, ctx);
    let delta = complex_of_ideal(ideal)?;
    if ideal.is_zero() {
        return Ok(table);
    }
    if ideal.is_unit() {
        table.add(0, Monomial::one(ctx), 1);
        return Ok(table);
    }
    let n = ctx.len();
    if n > 24 {
        return Err(Error::Resource(format!("Hochster route over {n} variables")));
    }
    let support_mask: u32 = ideal.support().iter().fold(0, |acc, &v| acc | 1 << v);
    let results: Vec<(u32, Vec<usize>)> = (1u32..(1u32 << n))
        // a vertex outside the support of I is a cone point of Δ|_σ
        .filter(|s| s & !support_mask == 0)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|s| {
            let sigma: Vec<usize> = (0..n).filter(|b| s >> b & 1 == 1).collect();
            let sub = delta.induced_subcomplex_indices(&sigma)?;
            let h = homology_dims_multi(&sub, &[field], guards)?.remove(0);
            Ok((s, h.dims))
        })
        .collect::<Result<_>>()?;
    for (s, dims) in results {
        let size = s.count_ones() as isize;
        let mut e = vec![0u32; n];
        for (b, x) in e.iter_mut().enumerate() {
            *x = s >> b & 1;
        }
        let m = Monomial::from_exponents(ctx, e)?;
        for (k, &d) in dims.iter().enumerate() {
            // H̃_{k-1} with k-1 = |σ| - i - 2
            let i = size - k as isize - 1;
            if i >= 0 {
                table.add(i as usize, m.clone(), d as u64);
            }
        }
    }
    Ok(table)
}

/// Whether `m` is an element of the lcm-lattice of `I` (lcm of the
/// generators dividing it equals `m`).
pub fn in_lattice(ideal: &MonomialIdeal, m: &Monomial) -> bool {
    let e = m.exponents();
    let mut acc = vec![0u32; e.len()].into_boxed_slice();
    let mut any = false;
    for g in ideal.generators() {
        if exps_divide(g.exponents(), e) {
            acc = exps_lcm(&acc, g.exponents());
            any = true;
        }
    }
    any && &*acc == e
}
