use std::fmt;

use num_bigint::BigInt;

use super::chain::ChainComplex;
use crate::complexes::SimplicialComplex;
use crate::config::Guards;
use crate::error::Result;
use crate::field::FieldSpec;
use crate::linalg::{rank_mod_p, rank_rational, smith_invariants};

/// Reduced homology of a complex over a field, or over ℤ.
///
/// `dims[k]` is the rank of `H̃_{k-1}`, so the first entry is the
/// augmentation degree `-1`. Over ℤ, `torsion[k]` holds the invariant
/// factors `> 1` of the same group; over a field it is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    /// `None` means integer coefficients.
    pub field: Option<FieldSpec>,
    pub dims: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyResult {
    fn zero(field: Option<FieldSpec>, len: usize) -> Self {
        HomologyResult {
            field,
            dims: vec![0; len],
            torsion: if field.is_none() { vec![Vec::new(); len] } else { Vec::new() },
        }
    }

    /// Rank (field dimension, or free rank over ℤ) of `H̃_d`, `d >= -1`.
    pub fn dim(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.dims.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// Invariant factors of `H̃_d` over ℤ.
    pub fn torsion_of(&self, d: isize) -> &[BigInt] {
        if d < -1 {
            return &[];
        }
        self.torsion.get((d + 1) as usize).map_or(&[], Vec::as_slice)
    }

    /// Whether every reduced homology group vanishes.
    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0) && self.torsion.iter().all(Vec::is_empty)
    }

    /// Number of invariant factors of `H̃_d` divisible by `p`.
    pub fn torsion_count(&self, d: isize, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion_of(d)
            .iter()
            .filter(|t| (*t % &p) == BigInt::from(0))
            .count()
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.field.map_or_else(|| "Z".to_string(), |k| k.to_string());
        let mut first = true;
        for (k, &r) in self.dims.iter().enumerate() {
            let tors = self.torsion.get(k).map_or(&[][..], Vec::as_slice);
            if r == 0 && tors.is_empty() {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            let mut parts = Vec::new();
            if r > 0 {
                parts.push(if r == 1 { ring.clone() } else { format!("{ring}^{r}") });
            }
            for t in tors {
                parts.push(format!("Z/{t}"));
            }
            write!(f, "H{}={}", k as isize - 1, parts.join("+"))?;
        }
        if first {
            f.write_str("acyclic")?;
        }
        Ok(())
    }
}

/// Number of homology slots (`-1..=dim`) for a complex.
fn slots(complex: &SimplicialComplex) -> usize {
    complex.dimension().map_or(0, |d| (d + 2) as usize)
}

/// Rank of a boundary matrix over a field.
pub(crate) fn field_rank(m: &crate::linalg::SparseIntMatrix, field: FieldSpec, guards: &Guards) -> Result<usize> {
    match field {
        FieldSpec::Prime(p) => Ok(rank_mod_p(m, p)),
        FieldSpec::Rationals => rank_rational(m, guards.max_entry_bits),
    }
}

/// Reduced homology dimensions over each requested field; the chain complex
/// is built once and shared.
pub fn homology_dims_multi(
    complex: &SimplicialComplex,
    fields: &[FieldSpec],
    guards: &Guards,
) -> Result<Vec<HomologyResult>> {
    for f in fields {
        f.validate()?;
    }
    let n = slots(complex);
    if complex.is_void() || complex.cone_apex().is_some() {
        return Ok(fields.iter().map(|&f| HomologyResult::zero(Some(f), n)).collect());
    }
    let chain = ChainComplex::new(complex, guards.max_faces)?;
    let sizes = chain.rank_sizes();
    fields
        .iter()
        .map(|&f| {
            let mut ranks = Vec::with_capacity(sizes.len() + 1);
            for m in chain.boundaries() {
                ranks.push(field_rank(m, f, guards)?);
            }
            ranks.push(0);
            let dims = (0..sizes.len()).map(|k| sizes[k] - ranks[k] - ranks[k + 1]).collect();
            Ok(HomologyResult {
                field: Some(f),
                dims,
                torsion: Vec::new(),
            })
        })
        .collect()
}

/// Reduced homology dimensions over one field.
pub fn homology_dims(complex: &SimplicialComplex, field: FieldSpec, guards: &Guards) -> Result<HomologyResult> {
    Ok(homology_dims_multi(complex, &[field], guards)?.remove(0))
}

/// Reduced integer homology: free rank and invariant factors per degree,
/// from the Smith normal form of each boundary matrix.
pub fn integer_homology(complex: &SimplicialComplex, guards: &Guards) -> Result<HomologyResult> {
    let n = slots(complex);
    if complex.is_void() || complex.cone_apex().is_some() {
        return Ok(HomologyResult::zero(None, n));
    }
    let chain = ChainComplex::new(complex, guards.max_faces)?;
    let sizes = chain.rank_sizes();
    let mut snf = Vec::with_capacity(sizes.len());
    for m in chain.boundaries() {
        snf.push(smith_invariants(m, guards.max_entry_bits)?);
    }
    let rank_of = |k: usize| snf.get(k).map_or(0, |s| s.rank);
    let dims = (0..sizes.len()).map(|k| sizes[k] - rank_of(k) - rank_of(k + 1)).collect();
    // Torsion of H̃_d comes from the image of ∂_{d+1}.
    let torsion = (0..sizes.len())
        .map(|k| snf.get(k + 1).map(|s| s.torsion.clone()).unwrap_or_default())
        .collect();
    Ok(HomologyResult {
        field: None,
        dims,
        torsion,
    })
}
