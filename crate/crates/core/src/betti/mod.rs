//! Betti numbers of monomial ideals by two independent routes, derived
//! invariants, Betti splittings and the power formula for `I + (w)`.

mod compute;
mod splitting;
mod table;

pub use compute::{
    betti_at, betti_at_multi, betti_table, betti_tables, hochster_betti, in_lattice, BettiOptions, Route,
};
pub use splitting::{check_splitting, formula_check, formula_rhs, FormulaComparison, SplittingReport};
pub use table::BettiTable;

/// Total indices where two tables differ: `(i, β_i(a), β_i(b))`.
pub fn total_differences(a: &BettiTable, b: &BettiTable) -> Vec<(usize, u64, u64)> {
    let (ta, tb) = (a.total(), b.total());
    (0..ta.len().max(tb.len()))
        .filter_map(|i| {
            let (x, y) = (ta.get(i).copied().unwrap_or(0), tb.get(i).copied().unwrap_or(0));
            (x != y).then_some((i, x, y))
        })
        .collect()
}

/// Entrywise `β^ℚ_{i,m} ≤ β^{𝔽_p}_{i,m}`, the direction forced by universal
/// coefficients.
pub fn uct_holds(rational: &BettiTable, modular: &BettiTable) -> bool {
    rational.entries().all(|(i, m, v)| v <= modular.get(i, m))
}

/// Multigraded `β_0` and `β_1` agree between the two tables.
pub fn low_degrees_agree(a: &BettiTable, b: &BettiTable) -> bool {
    let low = |t: &BettiTable| -> Vec<(usize, String, u64)> {
        t.entries()
            .filter(|(i, _, _)| *i <= 1)
            .map(|(i, m, v)| (i, m.to_string(), v))
            .collect()
    };
    low(a) == low(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::construct::{dunce_cap, katzman, kty, kty_alpha, rp2};
    use crate::config::Guards;
    use crate::field::FieldSpec;
    use crate::ideals::text::{parse_ideal, parse_monomial};
    use crate::ideals::{power, VariableContext};

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::Prime(2);
    const F3: FieldSpec = FieldSpec::Prime(3);

    fn no_cache(route: Route) -> BettiOptions {
        BettiOptions {
            route,
            no_cache: true,
            ..Default::default()
        }
    }

    #[test]
    fn maximal_ideal_is_koszul() {
        for n in 1..=5usize {
            let ctx = VariableContext::numbered("x", n);
            let gens = (0..n).map(|v| crate::ideals::Monomial::var(&ctx, v));
            let i = crate::ideals::MonomialIdeal::minimalize(&ctx, gens).unwrap();
            let t = betti_table(&i, Q).unwrap();
            let expected: Vec<u64> = (0..n).map(|k| binom(n as u64, k as u64 + 1)).collect();
            assert_eq!(t.total(), expected);
            assert_eq!(t.pd().unwrap(), n - 1);
            assert_eq!(t.reg().unwrap(), 1);
        }
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
    }

    #[test]
    fn triangle_edges_both_routes() {
        let i = parse_ideal("x y\ny z\nx z\n").unwrap();
        for f in [Q, F2, F3] {
            let a = betti_tables(&i, &[f], &no_cache(Route::Koszul)).unwrap().remove(0);
            let b = betti_tables(&i, &[f], &no_cache(Route::LatticeInterval)).unwrap().remove(0);
            let c = hochster_betti(&i, f, &Guards::default()).unwrap();
            assert_eq!(a.total(), vec![3, 2]);
            assert_eq!(a, b);
            assert_eq!(a, c);
        }
    }

    #[test]
    fn single_generator() {
        let i = parse_ideal("x1 x2 x3\n").unwrap();
        let t = hochster_betti(&i, Q, &Guards::default()).unwrap();
        assert_eq!(t.total(), vec![1]);
        assert_eq!(t, betti_table(&i, Q).unwrap());
    }

    #[test]
    fn zero_ideal_has_no_invariants() {
        let z = parse_ideal("vars: x\n").unwrap();
        let t = betti_table(&z, Q).unwrap();
        assert!(t.is_empty());
        assert!(matches!(t.pd(), Err(crate::Error::UndefinedInvariant(_))));
        assert!(matches!(t.reg(), Err(crate::Error::UndefinedInvariant(_))));
    }

    #[test]
    fn projective_plane_tables() {
        let i = rp2();
        let q = betti_table(&i, Q).unwrap();
        let f2 = betti_table(&i, F2).unwrap();
        let f3 = betti_table(&i, F3).unwrap();
        assert!(!total_differences(&q, &f2).is_empty());
        assert!(total_differences(&q, &f3).is_empty());
        assert!(uct_holds(&q, &f2));
        assert!(low_degrees_agree(&q, &f2));
        assert_eq!(f2, hochster_betti(&i, F2, &Guards::default()).unwrap());
        let lat = betti_tables(&i, &[F2], &no_cache(Route::LatticeInterval)).unwrap().remove(0);
        assert_eq!(f2, lat);
    }

    #[test]
    fn dunce_cap_projective_dimension_jumps() {
        for p in [2u64, 3] {
            let i = dunce_cap(p as u32).unwrap().stanley_reisner_ideal();
            let q = betti_table(&i, Q).unwrap();
            let fp = betti_table(&i, FieldSpec::Prime(p)).unwrap();
            assert_eq!(fp.pd().unwrap() - q.pd().unwrap(), 1);
        }
    }

    #[test]
    fn katzman_regularity_depends_on_two() {
        let i = katzman().edge_ideal();
        let q = betti_table(&i, Q).unwrap();
        let f2 = betti_table(&i, F2).unwrap();
        assert_ne!(q.reg().unwrap(), f2.reg().unwrap());
    }

    #[test]
    fn kty_probe_at_alpha_one() {
        let a = kty();
        let m = kty_alpha(a.context(), 1).unwrap();
        let v = betti_at_multi(&a, &m, &[Q, F2], &Guards::default()).unwrap();
        let get = |f: usize, i: usize| v[f].get(i).copied().unwrap_or(0);
        assert!(get(1, 2) > get(0, 2));
        assert!(get(1, 3) > get(0, 3));
    }

    #[test]
    fn betti_at_generators_and_off_lattice() {
        let i = parse_ideal("x^2\nx y\ny^3\n").unwrap();
        for g in i.generators() {
            assert_eq!(betti_at(&i, g, 0, Q).unwrap(), 1);
        }
        let off = parse_monomial(i.context(), "x^2 y^2").unwrap();
        assert!(!in_lattice(&i, &off));
        assert_eq!(betti_at(&i, &off, 1, Q).unwrap(), 0);
        let on = parse_monomial(i.context(), "x^2 y").unwrap();
        assert_eq!(betti_at(&i, &on, 1, Q).unwrap(), 1);
    }

    #[test]
    fn splittings() {
        let i = parse_ideal("x^2\ny^2\n").unwrap();
        let j = crate::ideals::MonomialIdeal::minimalize(i.context(), vec![i.generators()[0].clone()]).unwrap();
        let k = crate::ideals::MonomialIdeal::minimalize(i.context(), vec![i.generators()[1].clone()]).unwrap();
        let r = check_splitting(&i, &j, &k, Q, &BettiOptions::default()).unwrap();
        assert!(r.holds && r.multigraded_holds);
        assert!(matches!(
            check_splitting(&i, &j, &j, Q, &BettiOptions::default()),
            Err(crate::Error::PartitionViolated(_))
        ));

        // (zx, y)^2 = (zx)^2 + y(zx, y)
        let base = parse_ideal("vars: x y z\nz x\ny\n").unwrap();
        let sq = power(&base, 2).unwrap();
        let zx2 = parse_ideal("vars: x y z\nx^2 z^2\n").unwrap();
        let y = parse_monomial(base.context(), "y").unwrap();
        let rest = base.scale(&y).unwrap();
        for f in [Q, F2] {
            let r = check_splitting(&sq, &zx2, &rest, f, &BettiOptions::default()).unwrap();
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn formula_for_principal_plus_variable() {
        let i = parse_ideal("vars: x y\nx\n").unwrap();
        let w = parse_monomial(i.context(), "y").unwrap();
        for h in 1..=4u32 {
            let c = formula_check(&i, &w, h, Q, &BettiOptions::default()).unwrap();
            assert_eq!(c.formula, vec![h as u64 + 1, h as u64]);
            assert!(c.equal);
        }
    }

    #[test]
    fn json_layout() {
        let i = parse_ideal("x y\ny z\n").unwrap();
        let t = betti_table(&i, F2).unwrap();
        assert_eq!(
            t.to_json(),
            r#"{"field":"F2","total":[[0,2],[1,1]],"graded":[[0,2,2],[1,3,1]],"multigraded":[[0,"x y",1],[0,"y z",1],[1,"x y z",1]]}"#
        );
        let back = BettiTable::from_json(&t.to_json(), i.context()).unwrap();
        assert_eq!(back, t);
        let shifted = t.quotient_shifted();
        assert_eq!(shifted.total(), vec![1, 2, 1]);
    }
}
