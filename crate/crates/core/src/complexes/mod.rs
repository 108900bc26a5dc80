//! Simplicial complexes in facet form, graphs, the Stanley-Reisner
//! dictionary, Alexander duality and the named constructions.

mod complex;
pub mod construct;
mod graph;
pub mod text;

pub use complex::{complex_of_ideal, Face, SimplicialComplex};
pub use construct::{construct, Construction};
pub use graph::Graph;

#[cfg(test)]
mod tests {
    use super::construct::*;
    use super::*;
    use crate::ideals::text::ideal_to_text;

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::numbered(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap()
    }

    #[test]
    fn facets_are_maximal() {
        let c = SimplicialComplex::numbered(3, vec![vec![1, 2], vec![1, 2, 3], vec![2], vec![1, 2, 3]]).unwrap();
        assert_eq!(c.facets().len(), 1);
    }

    #[test]
    fn stanley_reisner_examples() {
        let simplex = SimplicialComplex::simplex(["1", "2", "3"]).unwrap();
        assert!(simplex.stanley_reisner_ideal().is_zero());
        let i = triangle_boundary().stanley_reisner_ideal();
        assert_eq!(i.to_string(), "(x1*x2*x3)");
        let void = SimplicialComplex::void(["1", "2"]).unwrap();
        assert!(void.stanley_reisner_ideal().is_unit());
        let irr = SimplicialComplex::irrelevant(["1", "2"]).unwrap();
        assert_eq!(irr.stanley_reisner_ideal().to_string(), "(x1, x2)");
    }

    #[test]
    fn dunce_cap_three_ideal_matches_published_list() {
        let expected = "vars: x1 x2 x3 x4 x5 x6 x7 x8 x9\n\
            x1 x5\nx1 x7\nx1 x9\nx5 x7\nx5 x8\nx5 x9\nx6 x8\nx6 x9\nx7 x9\n\
            x1 x2 x3\nx1 x4 x6\nx1 x4 x8\nx2 x3 x4\nx2 x3 x6\nx2 x3 x8\nx2 x4 x6\n\
            x2 x4 x7\nx2 x4 x8\nx2 x4 x9\nx2 x5 x6\nx2 x7 x8\nx3 x4 x5\nx3 x4 x6\n\
            x3 x4 x7\nx3 x4 x8\nx3 x6 x7\nx3 x8 x9\n";
        let i = dunce_cap(3).unwrap().stanley_reisner_ideal();
        assert_eq!(i.num_generators(), 27);
        assert_eq!(ideal_to_text(&i), expected);
    }

    #[test]
    fn complex_of_ideal_inverts() {
        let zero = crate::ideals::MonomialIdeal::zero(&crate::ideals::VariableContext::numbered("x", 3));
        let c = complex_of_ideal(&zero).unwrap();
        assert!(c.same_as(&SimplicialComplex::simplex(["1", "2", "3"]).unwrap()));
        let tri = complex_of_ideal(&triangle_boundary().stanley_reisner_ideal()).unwrap();
        assert!(tri.same_as(&triangle_boundary()));
        let klein = complex_of_ideal(&klein_bottle()).unwrap();
        assert_eq!(klein.stanley_reisner_ideal(), klein_bottle());
        assert_eq!(klein.f_vector(), vec![8, 24, 16]);
        assert_eq!(klein.euler_characteristic(), 0);
        let rp = complex_of_ideal(&rp2()).unwrap();
        assert_eq!(rp.f_vector(), vec![6, 15, 10]);
        assert_eq!(rp.euler_characteristic(), 1);
        let sq = crate::ideals::text::parse_ideal("x^2").unwrap();
        assert!(matches!(complex_of_ideal(&sq), Err(crate::Error::SquarefreeRequired(_))));
    }

    #[test]
    fn alexander_dual_examples() {
        let irr = SimplicialComplex::irrelevant(["1", "2", "3", "4"]).unwrap();
        let d = irr.alexander_dual();
        assert_eq!(d.facets().len(), 4);
        assert!(d.facets().iter().all(|f| f.len() == 3));
        assert!(triangle_boundary().alexander_dual().is_irrelevant());
        let d3 = dunce_cap(3).unwrap();
        assert!(d3.alexander_dual().alexander_dual().same_as(&d3));
    }

    #[test]
    fn induced_subcomplexes() {
        let c = dunce_cap(2).unwrap();
        let all: Vec<&str> = c.vertices().iter().map(String::as_str).collect();
        assert!(c.induced_subcomplex(&all).unwrap().same_as(&c));
        assert!(c.induced_subcomplex::<&str>(&[]).unwrap().is_irrelevant());
        assert!(matches!(c.induced_subcomplex(&["99"]), Err(crate::Error::UnknownVertex(_))));
    }

    #[test]
    fn barycentric_examples() {
        let edge = SimplicialComplex::numbered(2, vec![vec![1, 2]]).unwrap();
        let b = edge.barycentric_subdivision();
        assert_eq!(b.num_vertices(), 3);
        assert_eq!(b.facets().len(), 2);
        assert!(b.vertices().contains(&"1.2".to_string()));
        let hex = triangle_boundary().barycentric_subdivision();
        assert_eq!(hex.f_vector(), vec![6, 6]);
        let sr = hex.stanley_reisner_ideal();
        let d = dunce_cap(2).unwrap().barycentric_subdivision();
        assert!(d.stanley_reisner_ideal().generators().iter().all(|g| g.degree() == 2));
        assert!(sr.generators().iter().all(|g| g.degree() == 2));
    }

    #[test]
    fn graphs() {
        let empty = Graph::numbered(3, &[]).unwrap();
        assert!(empty.edge_ideal().is_zero());
        let e = Graph::numbered(2, &[(1, 2)]).unwrap();
        assert_eq!(e.edge_ideal().to_string(), "(x1*x2)");
        let cone = katzman().cone(None).unwrap();
        assert_eq!(cone.vertices().last().unwrap(), "12");
        assert_eq!(cone.edge_ideal().num_generators(), 34);
        let h = katzman().disjoint_edge(None).unwrap();
        let j = h.edge_ideal();
        assert_eq!(j.num_generators(), 24);
        assert!(j.generators().iter().any(|g| g.to_string() == "x12 x13"));
        assert!(Graph::numbered(2, &[(1, 1)]).is_err());
    }
}
