//! Independent oracles shared by the integration tests. Nothing here calls
//! the engine's linear algebra or lattice code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use lcmbetti::ideals::{MonomialIdeal, VariableContext};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Rank of a small dense integer matrix over ℚ (`p = 0`) or `𝔽_p`.
pub fn dense_rank(mut rows: Vec<Vec<i64>>, p: u64) -> usize {
    if p > 0 {
        let p = p as i64;
        for r in rows.iter_mut() {
            for v in r.iter_mut() {
                *v = v.rem_euclid(p);
            }
        }
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
            rows.swap(rank, piv);
            let inv = mod_inverse(rows[rank][c], p);
            for r in 0..rows.len() {
                if r != rank && rows[r][c] != 0 {
                    let f = rows[r][c] * inv % p;
                    for k in 0..cols {
                        rows[r][k] = (rows[r][k] - f * rows[rank][k]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    } else {
        let mut m: Vec<Vec<BigRational>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
            .collect();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
            m.swap(rank, piv);
            let inv = BigRational::one() / m[rank][c].clone();
            for r in 0..m.len() {
                if r != rank && !m[r][c].is_zero() {
                    let f = m[r][c].clone() * &inv;
                    for k in 0..cols {
                        let t = f.clone() * &m[rank][k];
                        m[r][k] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    let (mut t, mut nt, mut r, mut nr) = (0i64, 1i64, p, a.rem_euclid(p));
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    t.rem_euclid(p)
}

/// Reduced homology ranks `H̃_{-1}, H̃_0, …` of the complex generated by
/// `facets`, by enumerating every face and eliminating dense matrices.
pub fn reduced_homology(facets: &[Vec<usize>], p: u64) -> Vec<usize> {
    if facets.is_empty() {
        return Vec::new();
    }
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    for f in facets {
        let n = f.len();
        for mask in 0u32..(1 << n) {
            let face: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| f[k]).collect();
            let d = face.len();
            if faces.len() <= d {
                faces.resize(d + 1, Vec::new());
            }
            if !faces[d].contains(&face) {
                faces[d].push(face);
            }
        }
    }
    // faces[k] holds faces with k vertices; ∂_k maps faces[k] to faces[k-1]
    let rank_of = |k: usize| -> usize {
        if k == 0 || k >= faces.len() {
            return 0;
        }
        let rows: Vec<Vec<i64>> = faces[k]
            .iter()
            .map(|f| {
                let mut row = vec![0i64; faces[k - 1].len()];
                for j in 0..f.len() {
                    let mut g = f.clone();
                    g.remove(j);
                    let idx = faces[k - 1].iter().position(|x| *x == g).unwrap();
                    row[idx] = if j % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        dense_rank(rows, p)
    };
    (0..faces.len()).map(|k| faces[k].len() - rank_of(k) - rank_of(k + 1)).collect()
}

/// Multigraded Betti numbers of the ideal from the Taylor complex: for each
/// lcm `m`, the subsets of generators with lcm exactly `m` form a complex
/// whose homology in subset size `i + 1` is `β_{i,m}(I)`.
pub fn taylor_betti(gens: &[Vec<u32>], p: u64) -> BTreeMap<(usize, Vec<u32>), u64> {
    let n = gens.len();
    assert!(n <= 12, "Taylor oracle is exponential");
    let nv = gens.first().map_or(0, Vec::len);
    let mut by_lcm: BTreeMap<Vec<u32>, Vec<Vec<usize>>> = BTreeMap::new();
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        let mut l = vec![0u32; nv];
        for &g in &subset {
            for v in 0..nv {
                l[v] = l[v].max(gens[g][v]);
            }
        }
        by_lcm.entry(l).or_default().push(subset);
    }
    let mut out = BTreeMap::new();
    for (m, subsets) in by_lcm {
        let maxk = subsets.iter().map(Vec::len).max().unwrap_or(0);
        let of_size = |k: usize| -> Vec<&Vec<usize>> { subsets.iter().filter(|s| s.len() == k).collect() };
        let rank_of = |k: usize| -> usize {
            if k <= 1 {
                return 0;
            }
            let (hi, lo) = (of_size(k), of_size(k - 1));
            if hi.is_empty() || lo.is_empty() {
                return 0;
            }
            let rows: Vec<Vec<i64>> = hi
                .iter()
                .map(|s| {
                    let mut row = vec![0i64; lo.len()];
                    for j in 0..s.len() {
                        let mut t = (*s).clone();
                        t.remove(j);
                        if let Some(idx) = lo.iter().position(|x| **x == t) {
                            row[idx] = if j % 2 == 0 { 1 } else { -1 };
                        }
                    }
                    row
                })
                .collect();
            dense_rank(rows, p)
        };
        for k in 1..=maxk {
            let dim = of_size(k).len();
            let b = dim - rank_of(k) - rank_of(k + 1);
            if b > 0 {
                out.insert((k - 1, m.clone()), b as u64);
            }
        }
    }
    out
}

/// Generators of `ideal` as exponent vectors.
pub fn exps(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    ideal.generators().iter().map(|g| g.exponents().to_vec()).collect()
}

/// Random nonzero monomial ideal in `x1..xn` with at most `max_gens`
/// generators and exponents at most `max_exp`.
pub fn random_ideal(rng: &mut impl Rng, max_vars: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_vars);
    let ctx = VariableContext::numbered("x", n);
    let k = rng.gen_range(1..=max_gens);
    let mut gens = Vec::new();
    while gens.len() < k {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if e.iter().any(|&x| x > 0) {
            gens.push(lcmbetti::ideals::Monomial::from_exponents(&ctx, e).unwrap());
        }
    }
    MonomialIdeal::minimalize(&ctx, gens).unwrap()
}

/// Engine table flattened to the oracle's layout.
pub fn flatten(t: &lcmbetti::betti::BettiTable) -> BTreeMap<(usize, Vec<u32>), u64> {
    t.entries().map(|(i, m, v)| ((i, m.exponents().to_vec()), v)).collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}
