//! Named complexes, ideals and graphs with characteristic-dependent
//! resolutions.

use std::sync::Arc;

use super::complex::SimplicialComplex;
use super::graph::Graph;
use crate::error::{Error, Result};
use crate::ideals::text::parse_ideal;
use crate::ideals::{Monomial, MonomialIdeal, VariableContext};

/// Output of [`construct`].
#[derive(Debug, Clone)]
pub enum Construction {
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
    Graph(Graph),
}

impl Construction {
    /// The associated monomial ideal (Stanley-Reisner or edge ideal).
    pub fn ideal(&self) -> MonomialIdeal {
        match self {
            Construction::Complex(c) => c.stanley_reisner_ideal(),
            Construction::Ideal(i) => i.clone(),
            Construction::Graph(g) => g.edge_ideal(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Construction::Complex(_) => "complex",
            Construction::Ideal(_) => "ideal",
            Construction::Graph(_) => "graph",
        }
    }
}

pub const CONSTRUCTION_KEYS: [&str; 6] = [
    "dunce_cap",
    "klein_bottle",
    "rp2",
    "kty",
    "katzman",
    "edge_ideal_square_example",
];

/// Builds a named object. `name` accepts `-` or `_` and an inline parameter
/// as in `dunce_cap(3)`; `p` is only used by `dunce_cap`.
pub fn construct(name: &str, p: Option<u32>) -> Result<Construction> {
    let norm = name.trim().replace('-', "_");
    let (key, inline) = match norm.split_once('(') {
        Some((k, rest)) => {
            let v = rest
                .strip_suffix(')')
                .and_then(|s| s.trim().parse::<u32>().ok())
                .ok_or_else(|| Error::UnknownConstruction(name.to_string()))?;
            (k.to_string(), Some(v))
        }
        None => (norm, None),
    };
    match key.as_str() {
        "dunce_cap" => {
            let p = inline
                .or(p)
                .ok_or_else(|| Error::Argument("dunce_cap needs a parameter p >= 2".into()))?;
            Ok(Construction::Complex(dunce_cap(p)?))
        }
        "klein_bottle" => Ok(Construction::Ideal(klein_bottle())),
        "rp2" => Ok(Construction::Ideal(rp2())),
        "kty" => Ok(Construction::Ideal(kty())),
        "katzman" => Ok(Construction::Graph(katzman())),
        "edge_ideal_square_example" => Ok(Construction::Graph(edge_ideal_square_example())),
        _ => Err(Error::UnknownConstruction(name.to_string())),
    }
}

/// Triangulation `D_p` of the p-fold dunce cap on vertices `1..=2p+3`,
/// facets in the order of the four families.
pub fn dunce_cap(p: u32) -> Result<SimplicialComplex> {
    if p < 2 {
        return Err(Error::Argument(format!("dunce_cap needs p >= 2, got {p}")));
    }
    let p = p as usize;
    let top = 2 * p + 3;
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for k in (4..=2 * p + 2).step_by(2) {
        facets.push(vec![2, k, k + 1]);
        facets.push(vec![1, 2, k]);
        facets.push(vec![1, 3, k]);
    }
    for k in (5..=2 * p + 1).step_by(2) {
        facets.push(vec![3, k, k + 1]);
        facets.push(vec![2, 3, k]);
    }
    for k in 5..=2 * p + 2 {
        facets.push(vec![4, k, k + 1]);
    }
    facets.push(vec![2, 3, top]);
    facets.push(vec![3, 4, top]);
    SimplicialComplex::numbered(top, facets)
}

fn ideal_from(vars: usize, gens: &str) -> MonomialIdeal {
    let header: Vec<String> = (1..=vars).map(|i| format!("x{i}")).collect();
    let body: String = gens
        .split(',')
        .map(|g| {
            g.split_whitespace()
                .map(|v| format!("x{v}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n");
    parse_ideal(&format!("vars: {}\n{}\n", header.join(" "), body)).expect("built-in ideal parses")
}

/// Stanley-Reisner ideal of the 6-vertex real projective plane.
pub fn rp2() -> MonomialIdeal {
    ideal_from(
        6,
        "1 2 3, 1 2 4, 1 3 5, 1 4 6, 1 5 6, 2 3 6, 2 4 5, 2 5 6, 3 4 5, 3 4 6",
    )
}

/// Stanley-Reisner ideal of an 8-vertex triangulation of the Klein bottle.
pub fn klein_bottle() -> MonomialIdeal {
    ideal_from(
        8,
        "3 8, 4 5, 6 7, 7 8, 1 2 4, 1 3 4, 2 3 4, 1 2 5, 2 3 5, 1 4 6, 1 5 6, 2 5 6, \
         1 2 7, 1 3 7, 2 4 7, 3 5 7, 1 2 8, 1 5 8, 2 6 8, 1 3 6, 2 3 6, 4 6 8",
    )
}

/// Six quintics in ten variables.
pub fn kty() -> MonomialIdeal {
    ideal_from(
        10,
        "1 2 8 9 10, 2 3 4 5 10, 5 6 7 8 10, 1 4 5 6 9, 1 2 3 6 7, 3 4 7 8 9",
    )
}

/// Katzman's 11-vertex graph.
pub fn katzman() -> Graph {
    Graph::numbered(
        11,
        &[
            (1, 5), (1, 6), (1, 8), (1, 10), (2, 5), (2, 6), (2, 9), (2, 11),
            (3, 7), (3, 8), (3, 9), (3, 11), (4, 7), (4, 8), (4, 10), (4, 11),
            (5, 8), (5, 9), (6, 10), (6, 11), (7, 9), (7, 10), (8, 11),
        ],
    )
    .expect("built-in graph is simple")
}

/// 12-vertex graph whose edge ideal is field-independent but whose square
/// is not. The published list repeats the edge {2,12}; it is kept once.
pub fn edge_ideal_square_example() -> Graph {
    Graph::numbered(
        12,
        &[
            (1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 12), (1, 4), (1, 6), (1, 7), (1, 8),
            (2, 12), (3, 5), (3, 8), (3, 11), (3, 12), (4, 5), (4, 9), (4, 10), (5, 7), (5, 9),
            (6, 7), (6, 10), (6, 11), (7, 8), (7, 9), (7, 12), (8, 11), (9, 10), (9, 12),
            (10, 11), (10, 12), (11, 12),
        ],
    )
    .expect("built-in graph is simple")
}

fn monomial_from(ctx: &Arc<VariableContext>, exps: Vec<u32>) -> Result<Monomial> {
    Monomial::from_exponents(ctx, exps)
}

/// `m_h = x1 x2 x3 x4^h x5^h x6 x7 x8` in the context of [`klein_bottle`].
pub fn klein_bottle_alpha(ctx: &Arc<VariableContext>, h: u32) -> Result<Monomial> {
    monomial_from(ctx, vec![1, 1, 1, h, h, 1, 1, 1])
}

/// `x^α_h` with `α_h = (h,h,1,1,1,1,1,h,h,h)` in the context of [`kty`].
pub fn kty_alpha(ctx: &Arc<VariableContext>, h: u32) -> Result<Monomial> {
    monomial_from(ctx, vec![h, h, 1, 1, 1, 1, 1, h, h, h])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dunce_cap_counts() {
        for p in [2u32, 3, 5, 7] {
            let d = dunce_cap(p).unwrap();
            let f = d.f_vector();
            let p = p as usize;
            assert_eq!(f, vec![2 * p + 3, 9 * p, 7 * p - 2]);
            assert_eq!(d.facets().len(), 7 * p - 2);
        }
        assert!(dunce_cap(1).is_err());
    }

    #[test]
    fn named_sizes() {
        assert_eq!(rp2().num_generators(), 10);
        let k = klein_bottle();
        assert_eq!(k.context().len(), 8);
        assert_eq!(k.num_generators(), 22);
        assert_eq!(k.generators().iter().filter(|g| g.degree() == 2).count(), 4);
        let a = kty();
        assert_eq!(a.context().len(), 10);
        assert!(a.generators().iter().all(|g| g.degree() == 5));
        assert_eq!(a.num_generators(), 6);
        assert_eq!(katzman().edges().len(), 23);
        assert_eq!(edge_ideal_square_example().edges().len(), 31);
    }

    #[test]
    fn key_parsing() {
        assert!(matches!(construct("dunce-cap", Some(3)), Ok(Construction::Complex(_))));
        assert!(matches!(construct("dunce_cap(2)", None), Ok(Construction::Complex(_))));
        assert!(matches!(construct("dunce_cap", None), Err(Error::Argument(_))));
        assert!(matches!(construct("torus", None), Err(Error::UnknownConstruction(_))));
        assert_eq!(construct("katzman", None).unwrap().ideal().num_generators(), 23);
    }
}
