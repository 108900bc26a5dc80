//! lcm-lattices, order complexes of their open intervals, and exact reduced
//! simplicial homology over ℚ, 𝔽_p and ℤ.

mod chain;
mod homology;
mod koszul;
mod lattice;

pub use chain::ChainComplex;
pub use homology::{homology_dims, homology_dims_multi, integer_homology, HomologyResult};
pub(crate) use koszul::koszul_facets;
pub use koszul::upper_koszul_complex;
pub use lattice::{LcmLattice, DEFAULT_MAX_LATTICE};

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::complexes::construct::{dunce_cap, rp2};
    use crate::complexes::{complex_of_ideal, SimplicialComplex};
    use crate::config::Guards;
    use crate::field::FieldSpec;
    use crate::ideals::text::{parse_ideal, parse_monomial};

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::Prime(2);
    const F3: FieldSpec = FieldSpec::Prime(3);

    fn g() -> Guards {
        Guards::default()
    }

    #[test]
    fn lattice_of_two_variables() {
        let i = parse_ideal("x\ny\n").unwrap();
        let l = LcmLattice::build(&i, 100).unwrap();
        let names: Vec<String> = l.elements().iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["1", "x", "y", "x y"]);
        assert_eq!(l.top().to_string(), "x y");
        assert_eq!(l.num_atoms(), 2);
    }

    #[test]
    fn lattice_of_triangle_edges() {
        let i = parse_ideal("x y\ny z\nx z\n").unwrap();
        let l = LcmLattice::build(&i, 100).unwrap();
        assert_eq!(l.len(), 5);
        let top = parse_monomial(i.context(), "x y z").unwrap();
        let iv = l.open_interval(&top).unwrap();
        assert_eq!(iv.num_vertices(), 3);
        assert_eq!(iv.facets().len(), 3);
        assert!(iv.facets().iter().all(|f| f.len() == 1));
        let atom = parse_monomial(i.context(), "x y").unwrap();
        assert!(l.open_interval(&atom).unwrap().is_irrelevant());
        let off = parse_monomial(i.context(), "x").unwrap();
        assert!(matches!(l.open_interval(&off), Err(crate::Error::NotInLattice(_))));
    }

    #[test]
    fn lattice_of_maximal_ideal_in_three_variables() {
        let i = parse_ideal("x\ny\nz\n").unwrap();
        assert_eq!(LcmLattice::build(&i, 100).unwrap().len(), 8);
        assert!(matches!(LcmLattice::build(&i, 5), Err(crate::Error::Resource(_))));
    }

    #[test]
    fn interval_of_square_of_maximal_ideal() {
        let i = parse_ideal("x^2\nx y\ny^2\n").unwrap();
        let l = LcmLattice::build(&i, 100).unwrap();
        let top = parse_monomial(i.context(), "x^2 y^2").unwrap();
        let iv = l.open_interval(&top).unwrap();
        // elements below x²y²: x², xy, y², x²y, xy²
        assert_eq!(iv.num_vertices(), 5);
        let h = homology_dims(&iv, Q, &g()).unwrap();
        assert!(h.is_acyclic());
    }

    #[test]
    fn lattice_of_rp2_has_generators_as_atoms() {
        let i = rp2();
        let l = LcmLattice::build(&i, 10_000).unwrap();
        assert_eq!(l.num_atoms(), 10);
        let hasse = l.hasse();
        let atoms: Vec<usize> = (1..l.len()).filter(|&k| l.raw_elements()[k].iter().sum::<u32>() == 3).collect();
        assert_eq!(atoms.len(), 10);
        assert!(hasse[0].len() == 10);
    }

    #[test]
    fn homology_of_points_and_spheres() {
        let pts = SimplicialComplex::numbered(3, vec![vec![1], vec![2], vec![3]]).unwrap();
        for f in [Q, F2, F3] {
            let h = homology_dims(&pts, f, &g()).unwrap();
            assert_eq!(h.dims, vec![0, 2]);
        }
        let irr = SimplicialComplex::irrelevant(["a"]).unwrap();
        assert_eq!(homology_dims(&irr, Q, &g()).unwrap().dims, vec![1]);
        let void = SimplicialComplex::void(["a"]).unwrap();
        assert!(homology_dims(&void, Q, &g()).unwrap().dims.is_empty());
        let tri = SimplicialComplex::numbered(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        let z = integer_homology(&tri, &g()).unwrap();
        assert_eq!(z.dim(1), 1);
        assert!(z.torsion_of(1).is_empty());
        assert!(matches!(
            homology_dims(&tri, FieldSpec::Prime(4), &g()),
            Err(crate::Error::InvalidField(_))
        ));
    }

    #[test]
    fn projective_plane_depends_on_two() {
        let c = complex_of_ideal(&rp2()).unwrap();
        let q = homology_dims(&c, Q, &g()).unwrap();
        let f2 = homology_dims(&c, F2, &g()).unwrap();
        assert_eq!(q.dim(1), 0);
        assert_eq!(f2.dim(1), 1);
        assert_eq!(f2.dim(2), 1);
        let z = integer_homology(&c, &g()).unwrap();
        assert_eq!(z.torsion_of(1), [BigInt::from(2)]);
    }

    #[test]
    fn dunce_caps() {
        for p in [2u64, 3, 5] {
            let d = dunce_cap(p as u32).unwrap();
            let z = integer_homology(&d, &g()).unwrap();
            assert_eq!(z.dim(0), 0);
            assert_eq!(z.dim(1), 0);
            assert_eq!(z.dim(2), 0);
            assert_eq!(z.torsion_of(1), [BigInt::from(p)]);
            assert!(z.torsion_of(0).is_empty() && z.torsion_of(2).is_empty());
            let fp = homology_dims(&d, FieldSpec::Prime(p), &g()).unwrap();
            assert_eq!((fp.dim(1), fp.dim(2)), (1, 1));
            assert!(homology_dims(&d, Q, &g()).unwrap().is_acyclic());
            let b = d.barycentric_subdivision();
            let zb = integer_homology(&b, &g()).unwrap();
            assert_eq!(zb.torsion_of(1), [BigInt::from(p)]);
        }
    }

    #[test]
    fn chain_complex_squares_to_zero() {
        let d = dunce_cap(3).unwrap();
        let c = ChainComplex::new(&d, 1_000).unwrap();
        assert!(c.boundary_squared_vanishes());
        assert_eq!(c.basis(2).len(), 19);
        let triples = c.export(1).unwrap();
        assert!(triples.starts_with("9 27\n"));
        assert!(matches!(ChainComplex::new(&d, 10), Err(crate::Error::Resource(_))));
    }

    #[test]
    fn koszul_matches_interval() {
        let i = parse_ideal("x^2\nx y\ny^2 z\nz^2\n").unwrap();
        let l = LcmLattice::build(&i, 1000).unwrap();
        // the bottom element is excluded: (1,1) is not an interval of the theorem
        for m in l.elements().into_iter().skip(1) {
            let a = homology_dims(&l.open_interval(&m).unwrap(), Q, &g()).unwrap();
            let b = homology_dims(&upper_koszul_complex(&i, &m).unwrap(), Q, &g()).unwrap();
            for d in -1..4 {
                assert_eq!(a.dim(d), b.dim(d), "m = {m}, d = {d}");
            }
        }
    }
}
