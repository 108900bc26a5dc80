use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideals::{same_context, Monomial, MonomialIdeal};

/// Upper Koszul simplicial complex `K^m(I)`: squarefree `τ ⊆ supp(m)` with
/// `m / x^τ ∈ I`.
///
/// It is generated by the sets `{j : g_j < m_j}` for the generators `g`
/// dividing `m`, and its reduced homology in degree `i-1` has the same
/// dimension as that of the open interval `(1, m)` of the lcm-lattice, so it
/// computes the same Betti numbers while only ever having `|supp m|`
/// vertices. Vertices are labelled by variable names.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, m: &Monomial) -> Result<SimplicialComplex> {
    if !same_context(ideal.context(), m.context()) {
        return Err(Error::ContextMismatch(format!("{m} is not over the ring of the ideal")));
    }
    let support = m.support();
    let labels: Vec<String> = support.iter().map(|&v| ideal.context().name(v).to_string()).collect();
    let facets = koszul_facets(ideal, m.exponents(), &support);
    SimplicialComplex::from_facets(labels, facets)
}

/// Facets of `K^m(I)` as positions into `support`.
pub(crate) fn koszul_facets(ideal: &MonomialIdeal, m: &[u32], support: &[usize]) -> Vec<Vec<usize>> {
    ideal
        .generators()
        .iter()
        .filter(|g| g.exponents().iter().zip(m).all(|(a, b)| a <= b))
        .map(|g| {
            let e = g.exponents();
            support
                .iter()
                .enumerate()
                .filter(|&(_, &v)| e[v] < m[v])
                .map(|(k, _)| k)
                .collect()
        })
        .collect()
}
