use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideals::{canonical_cmp, exps_divide, exps_lcm, Monomial, MonomialIdeal, VariableContext};

/// The lcm-lattice of a monomial ideal: all lcms of subsets of the minimal
/// generators, the empty subset giving the bottom element `1`.
#[derive(Debug)]
pub struct LcmLattice {
    ctx: Arc<VariableContext>,
    /// Sorted canonically; index 0 is the bottom element.
    elements: Vec<Box<[u32]>>,
    index: HashMap<Box<[u32]>, usize>,
    atoms: usize,
    hasse: OnceLock<Vec<Vec<u32>>>,
}

/// Default cap on lattice size.
pub const DEFAULT_MAX_LATTICE: usize = 2_000_000;

impl LcmLattice {
    /// Closes `G(I)` under lcm. Fails with a resource error once more than
    /// `max_elements` elements exist.
    pub fn build(ideal: &MonomialIdeal, max_elements: usize) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::Argument("the lcm-lattice of the zero ideal is undefined".into()));
        }
        let ctx = ideal.context().clone();
        let atoms: Vec<Box<[u32]>> = ideal.generators().iter().map(|g| g.exponents().into()).collect();
        let bottom: Box<[u32]> = vec![0u32; ctx.len()].into();
        let mut all: HashSet<Box<[u32]>> = HashSet::new();
        all.insert(bottom);
        let mut frontier = Vec::new();
        for a in &atoms {
            if all.insert(a.clone()) {
                frontier.push(a.clone());
            }
        }
        // Every lcm of a subset is reached by repeatedly joining one atom.
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in &frontier {
                for a in &atoms {
                    if exps_divide(a, f) {
                        continue;
                    }
                    let l = exps_lcm(a, f);
                    if !all.contains(&l) {
                        all.insert(l.clone());
                        next.push(l);
                        if all.len() > max_elements {
                            return Err(Error::Resource(format!(
                                "lcm-lattice exceeds {max_elements} elements"
                            )));
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Box<[u32]>> = all.into_iter().collect();
        elements.sort_unstable_by(|a, b| canonical_cmp(a, b));
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Ok(LcmLattice {
            ctx,
            elements,
            index,
            atoms: atoms.len(),
            hasse: OnceLock::new(),
        })
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn num_atoms(&self) -> usize {
        self.atoms
    }

    pub fn elements(&self) -> Vec<Monomial> {
        self.elements.iter().map(|e| Monomial::from_raw(&self.ctx, e.clone())).collect()
    }

    pub(crate) fn raw_elements(&self) -> &[Box<[u32]>] {
        &self.elements
    }

    pub fn bottom(&self) -> Monomial {
        Monomial::one(&self.ctx)
    }

    /// `lcm(G(I))`: the largest element under divisibility.
    pub fn top(&self) -> Monomial {
        let top = self
            .elements
            .iter()
            .fold(vec![0u32; self.ctx.len()].into_boxed_slice(), |acc, e| exps_lcm(&acc, e));
        Monomial::from_raw(&self.ctx, top)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.context().len() == self.ctx.len() && self.index.contains_key(m.exponents())
    }

    /// Upper covers of each element (transitive reduction of divisibility),
    /// computed on first use.
    pub fn hasse(&self) -> &[Vec<u32>] {
        self.hasse.get_or_init(|| {
            let n = self.elements.len();
            let mut up: Vec<Vec<u32>> = vec![Vec::new(); n];
            for i in 0..n {
                // elements above i, in canonical (hence degree) order
                let above: Vec<usize> = (i + 1..n)
                    .filter(|&j| exps_divide(&self.elements[i], &self.elements[j]))
                    .collect();
                let mut covers: Vec<usize> = Vec::new();
                for &j in &above {
                    if !covers.iter().any(|&c| exps_divide(&self.elements[c], &self.elements[j])) {
                        covers.push(j);
                    }
                }
                up[i] = covers.into_iter().map(|j| j as u32).collect();
            }
            up
        })
    }

    /// Order complex of the open interval `(1, m)`: vertices are the lattice
    /// elements strictly between `1` and `m`, faces their chains.
    pub fn open_interval(&self, m: &Monomial) -> Result<SimplicialComplex> {
        if !self.contains(m) {
            return Err(Error::NotInLattice(m.to_string()));
        }
        let top = m.exponents();
        let members: Vec<usize> = (1..self.elements.len())
            .filter(|&i| &*self.elements[i] != top && exps_divide(&self.elements[i], top))
            .collect();
        let labels: Vec<String> = members
            .iter()
            .map(|&i| {
                Monomial::from_raw(&self.ctx, self.elements[i].clone())
                    .to_string()
                    .replace(' ', "*")
            })
            .collect();
        if members.is_empty() {
            return SimplicialComplex::irrelevant(labels);
        }
        let pos: HashMap<usize, u32> = members.iter().enumerate().map(|(k, &i)| (i, k as u32)).collect();
        let hasse = self.hasse();
        // Maximal chains: start at minimal members, follow covers inside
        // the interval until no cover remains.
        let is_minimal = |i: usize| !members.iter().any(|&j| j != i && exps_divide(&self.elements[j], &self.elements[i]));
        let mut facets: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<Vec<usize>> = members.iter().filter(|&&i| is_minimal(i)).map(|&i| vec![i]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("nonempty chain");
            let ups: Vec<usize> = hasse[last]
                .iter()
                .map(|&u| u as usize)
                .filter(|u| pos.contains_key(u))
                .collect();
            if ups.is_empty() {
                facets.push(chain.iter().map(|i| pos[i] as usize).collect());
            } else {
                for u in ups {
                    let mut c = chain.clone();
                    c.push(u);
                    stack.push(c);
                }
            }
        }
        SimplicialComplex::from_facets(labels, facets)
    }
}
