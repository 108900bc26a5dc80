use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact polynomial fit of a sampled Betti sequence `h ↦ β_{i-1}(I^h)`.
///
/// The degree is the smallest `d` whose `d`-th forward differences are
/// constant over the trailing window of `max(3, d + 2)` samples, so that at
/// least two equal differences back the claim. Without such a `d` the fit is
/// marked unstable and carries no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KodiyalamFit {
    /// Index of the Kodiyalam polynomial; samples are `β_{index-1}`.
    pub index: usize,
    pub field: Option<String>,
    pub samples: Vec<(u32, i64)>,
    /// Row `k` holds the `k`-th forward differences of the samples.
    pub differences: Vec<Vec<i64>>,
    pub stable: bool,
    pub degree: Option<usize>,
    /// First and last `h` of the window the fit is certified on.
    pub window: Option<(u32, u32)>,
    /// Newton form at the window start: `P(h) = Σ_k newton[k]·C(h - h0, k)`.
    pub newton: Option<Vec<i64>>,
    /// Coefficients in ascending powers of `h`, as exact fractions.
    pub coefficients: Option<Vec<String>>,
}

fn differences(values: &[i64]) -> Vec<Vec<i64>> {
    let mut rows = vec![values.to_vec()];
    while rows.last().is_some_and(|r| r.len() > 1) {
        let r = rows.last().expect("nonempty");
        rows.push(r.windows(2).map(|w| w[1] - w[0]).collect());
    }
    rows
}

/// Fits `values` (pairs `(h, β)` with consecutive `h`, at least three).
pub fn fit_kodiyalam(values: &[(u32, i64)], index: usize) -> Result<KodiyalamFit> {
    if values.len() < 3 {
        return Err(Error::Argument("a fit needs at least three samples".into()));
    }
    if values.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::Argument("samples must be at consecutive powers h".into()));
    }
    let ys: Vec<i64> = values.iter().map(|v| v.1).collect();
    let table = differences(&ys);
    let n = ys.len();
    let mut fit = KodiyalamFit {
        index,
        field: None,
        samples: values.to_vec(),
        differences: table.clone(),
        stable: false,
        degree: None,
        window: None,
        newton: None,
        coefficients: None,
    };
    for d in 0..n {
        let w = (d + 2).max(3);
        if w > n {
            break;
        }
        let start = n - w;
        // d-th differences computed inside the window only
        let window_diffs = &differences(&ys[start..])[d];
        if window_diffs.windows(2).all(|p| p[0] == p[1]) {
            let local = differences(&ys[start..]);
            let newton: Vec<i64> = (0..=d).map(|k| local[k][0]).collect();
            let h0 = values[start].0;
            let coeffs = power_basis(&newton, h0);
            debug_assert!(values[start..].iter().all(|&(h, y)| eval(&coeffs, h) == BigRational::from_integer(y.into())));
            fit.stable = true;
            fit.degree = Some(d);
            fit.window = Some((h0, values[n - 1].0));
            fit.newton = Some(newton);
            fit.coefficients = Some(coeffs.iter().map(|c| c.to_string()).collect());
            break;
        }
    }
    Ok(fit)
}

/// Expands `Σ_k a_k C(h - h0, k)` into ascending powers of `h`.
fn power_basis(newton: &[i64], h0: u32) -> Vec<BigRational> {
    let deg = newton.len().saturating_sub(1);
    let mut out = vec![BigRational::zero(); deg + 1];
    // basis polynomial C(h - h0, k) = Π_{j<k} (h - h0 - j) / k!
    let mut basis = vec![BigRational::one()];
    for (k, &a) in newton.iter().enumerate() {
        if k > 0 {
            let shift = BigRational::from_integer(BigInt::from(h0 as i64 + k as i64 - 1));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (p, c) in basis.iter().enumerate() {
                next[p + 1] += c;
                next[p] -= c * &shift;
            }
            let kk = BigRational::from_integer(BigInt::from(k as i64));
            basis = next.into_iter().map(|c| c / &kk).collect();
        }
        let a = BigRational::from_integer(BigInt::from(a));
        for (p, c) in basis.iter().enumerate() {
            out[p] += &a * c;
        }
    }
    out
}

/// Evaluates ascending-power coefficients at `h`.
pub(crate) fn eval(coeffs: &[BigRational], h: u32) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(h));
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
}

impl KodiyalamFit {
    /// Value of the fitted polynomial at `h`, when stable.
    pub fn predict(&self, h: u32) -> Option<BigRational> {
        let coeffs: Vec<BigRational> = self
            .coefficients
            .as_ref()?
            .iter()
            .map(|s| s.parse().expect("coefficients are printed fractions"))
            .collect();
        Some(eval(&coeffs, h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(f: impl Fn(i64) -> i64, n: u32) -> Vec<(u32, i64)> {
        (1..=n).map(|h| (h, f(h as i64))).collect()
    }

    #[test]
    fn linear_and_constant() {
        let f = fit_kodiyalam(&seq(|h| h + 1, 5), 1).unwrap();
        assert!(f.stable);
        assert_eq!(f.degree, Some(1));
        assert_eq!(f.coefficients.as_deref(), Some(&["1".to_string(), "1".to_string()][..]));
        let c = fit_kodiyalam(&[(1, 7), (2, 7), (3, 7)], 1).unwrap();
        assert_eq!(c.degree, Some(0));
        assert_eq!(c.coefficients.unwrap(), ["7"]);
    }

    #[test]
    fn quadratic_with_fractions() {
        let f = fit_kodiyalam(&seq(|h| (h + 2) * (h + 1) / 2, 5), 1).unwrap();
        assert_eq!(f.degree, Some(2));
        assert_eq!(f.coefficients.clone().unwrap(), ["1", "3/2", "1/2"]);
        for (h, y) in seq(|h| (h + 2) * (h + 1) / 2, 5) {
            assert_eq!(f.predict(h).unwrap(), BigRational::from_integer(y.into()));
        }
    }

    #[test]
    fn unstable_and_errors() {
        let f = fit_kodiyalam(&[(1, 1), (2, 2), (3, 4), (4, 8)], 1).unwrap();
        assert!(!f.stable);
        assert!(f.coefficients.is_none());
        assert!(fit_kodiyalam(&[(1, 1), (3, 2), (4, 3)], 1).is_err());
        assert!(fit_kodiyalam(&[(1, 1), (2, 2)], 1).is_err());
    }
}
