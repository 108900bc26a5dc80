use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::ideals::{Monomial, MonomialIdeal, VariableContext};

/// A face: strictly increasing vertex indices.
pub type Face = SmallVec<[u32; 12]>;

/// Abstract simplicial complex in facet representation.
///
/// The vertex list is the ground set; a vertex need not be a face (it may be
/// a "ghost" vertex, e.g. a variable that is itself a generator of a
/// Stanley-Reisner ideal). The void complex has no facets at all; the
/// irrelevant complex `{∅}` has the single empty facet.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Face>,
}

/// Drops facets contained in other facets; keeps first-seen order.
pub(crate) fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    let mut seen = HashSet::new();
    faces.retain(|f| seen.insert(f.clone()));
    let keep: Vec<bool> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| {
            !faces
                .iter()
                .enumerate()
                .any(|(j, g)| i != j && g.len() > f.len() && is_subset(f, g))
        })
        .collect();
    faces.into_iter().zip(keep).filter(|(_, k)| *k).map(|(f, _)| f).collect()
}

/// Subset test on sorted index lists.
pub(crate) fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Stanley-Reisner variable name for a vertex label: numeric labels get an
/// `x` prefix so vertex `3` becomes variable `x3`.
pub(crate) fn variable_name(label: &str) -> String {
    if !label.is_empty() && label.bytes().all(|b| b.is_ascii_digit()) {
        format!("x{label}")
    } else {
        label.to_string()
    }
}

/// Inverse of [`variable_name`].
pub(crate) fn vertex_label(var: &str) -> String {
    match var.strip_prefix('x') {
        Some(rest) if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) => rest.to_string(),
        _ => var.to_string(),
    }
}

fn check_labels(vertices: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for v in vertices {
        if v.is_empty() || v.chars().any(char::is_whitespace) {
            return Err(Error::Argument(format!("invalid vertex label `{v}`")));
        }
        if !seen.insert(v.as_str()) {
            return Err(Error::Argument(format!("duplicate vertex label `{v}`")));
        }
    }
    Ok(())
}

impl SimplicialComplex {
    /// Complex generated by the given faces (indices into `vertices`).
    pub fn from_facets<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        facets: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        check_labels(&vertices)?;
        let mut fs = Vec::new();
        for f in facets {
            let mut face: Face = SmallVec::new();
            for v in f {
                if v >= vertices.len() {
                    return Err(Error::UnknownVertex(format!("#{}", v + 1)));
                }
                face.push(v as u32);
            }
            face.sort_unstable();
            face.dedup();
            fs.push(face);
        }
        Ok(SimplicialComplex {
            vertices,
            facets: maximal_faces(fs),
        })
    }

    /// Complex generated by faces given as vertex labels.
    pub fn from_labeled_facets<S: AsRef<str>>(vertices: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_ref(), i)).collect();
        let mut idx = Vec::new();
        for f in facets {
            let mut face = Vec::new();
            for v in f {
                face.push(
                    *index
                        .get(v.as_ref())
                        .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?,
                );
            }
            idx.push(face);
        }
        Self::from_facets(vertices.iter().map(|v| v.as_ref().to_string()), idx)
    }

    /// Trusted constructor: `facets` are sorted, distinct and inclusion-maximal.
    pub(crate) fn from_maximal_unchecked(vertices: Vec<String>, facets: Vec<Face>) -> Self {
        SimplicialComplex { vertices, facets }
    }

    pub fn void<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::from_facets(vertices, Vec::<Vec<usize>>::new())
    }

    pub fn irrelevant<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::from_facets(vertices, vec![Vec::new()])
    }

    /// The full simplex on all vertices.
    pub fn simplex<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let all = (0..vertices.len()).collect();
        Self::from_facets(vertices, vec![all])
    }

    /// Vertices labelled `1..=n`.
    pub fn numbered(n: usize, facets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        Self::from_facets(
            (1..=n).map(|i| i.to_string()),
            facets.into_iter().map(|f| f.into_iter().map(|v| v - 1).collect()),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension (`-1` for `{∅}`, `None` for the void complex).
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    /// Whether some vertex lies in every facet, making the complex a cone
    /// (hence contractible).
    pub fn cone_apex(&self) -> Option<u32> {
        let first = self.facets.first()?;
        first
            .iter()
            .copied()
            .find(|v| self.facets.iter().all(|f| f.binary_search(v).is_ok()))
    }

    /// All faces grouped by dimension: entry `d` holds the `d`-faces, sorted.
    /// The empty face is not included.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Face>> {
        self.faces_by_dimension_limited(usize::MAX).expect("no limit")
    }

    /// As [`Self::faces_by_dimension`], giving up with `None` once more than
    /// `limit` faces have been found.
    pub fn faces_by_dimension_limited(&self, limit: usize) -> Option<Vec<Vec<Face>>> {
        let top = self.facets.iter().map(Face::len).max().unwrap_or(0);
        let mut seen: Vec<HashSet<Face>> = vec![HashSet::new(); top];
        let mut count = 0usize;
        // Down-closure level by level from the facets.
        let mut level: HashSet<Face> = HashSet::new();
        for k in (1..=top).rev() {
            for f in self.facets.iter().filter(|f| f.len() == k) {
                level.insert(f.clone());
            }
            let mut next = HashSet::new();
            for g in level.drain() {
                if k > 1 {
                    for j in 0..k {
                        let mut s = g.clone();
                        s.remove(j);
                        if !seen[k - 2].contains(&s) {
                            next.insert(s);
                        }
                    }
                }
                seen[k - 1].insert(g);
            }
            count += seen[k - 1].len();
            if count > limit {
                return None;
            }
            level = next;
        }
        Some(
            seen.into_iter()
                .map(|s| {
                    let mut v: Vec<Face> = s.into_iter().collect();
                    v.sort_unstable();
                    v
                })
                .collect(),
        )
    }

    /// `(f_0, f_1, …)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dimension().iter().map(Vec::len).collect()
    }

    /// Unreduced Euler characteristic `Σ (-1)^d f_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Minimal non-faces, level by level: a `(k+1)`-set all of whose
    /// `k`-subsets are faces is either a face or a minimal non-face.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        if self.facets.is_empty() {
            out.push(Face::new());
            return out;
        }
        let faces = self.faces_by_dimension();
        let face_sets: Vec<HashSet<&Face>> = faces.iter().map(|l| l.iter().collect()).collect();
        let is_face = |f: &Face| -> bool {
            f.is_empty() || face_sets.get(f.len() - 1).is_some_and(|s| s.contains(f))
        };
        // level 1: ghost vertices
        let mut level: Vec<Face> = Vec::new();
        for v in 0..self.vertices.len() as u32 {
            let f: Face = SmallVec::from_slice(&[v]);
            if is_face(&f) {
                level.push(f);
            } else {
                out.push(f);
            }
        }
        let n = self.vertices.len() as u32;
        while !level.is_empty() {
            let mut next = Vec::new();
            for f in &level {
                let last = *f.last().expect("nonempty");
                for v in last + 1..n {
                    let mut cand = f.clone();
                    cand.push(v);
                    // all facets of the boundary must be faces
                    let all_sub = (0..cand.len() - 1).all(|j| {
                        let mut s = cand.clone();
                        s.remove(j);
                        is_face(&s)
                    });
                    if !all_sub {
                        continue;
                    }
                    if is_face(&cand) {
                        next.push(cand);
                    } else {
                        out.push(cand);
                    }
                }
            }
            level = next;
        }
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Variable context with one variable per vertex, in vertex order.
    pub fn variable_context(&self) -> Arc<VariableContext> {
        VariableContext::new(self.vertices.iter().map(|v| variable_name(v)))
            .expect("vertex labels map to distinct variable names")
    }

    /// The Stanley-Reisner ideal: generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let ctx = self.variable_context();
        let gens = self.minimal_nonfaces().into_iter().map(|f| {
            let mut e = vec![0u32; ctx.len()];
            for v in f {
                e[v as usize] = 1;
            }
            Monomial::from_exponents(&ctx, e).expect("sized to context")
        });
        MonomialIdeal::minimalize(&ctx, gens).expect("single context")
    }

    /// Alexander dual over the same vertex set: `{F : V∖F ∉ Δ}`. Its facets
    /// are the complements of the minimal non-faces.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let n = self.vertices.len() as u32;
        let facets: Vec<Face> = self
            .minimal_nonfaces()
            .into_iter()
            .map(|nf| (0..n).filter(|v| nf.binary_search(v).is_err()).collect())
            .collect();
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets: maximal_faces(facets),
        }
    }

    /// Faces contained in `sigma` (given as vertex indices).
    pub fn induced_subcomplex_indices(&self, sigma: &[usize]) -> Result<SimplicialComplex> {
        let mut mask = vec![false; self.vertices.len()];
        for &v in sigma {
            if v >= self.vertices.len() {
                return Err(Error::UnknownVertex(format!("#{}", v + 1)));
            }
            mask[v] = true;
        }
        let faces = self
            .facets
            .iter()
            .map(|f| f.iter().copied().filter(|&v| mask[v as usize]).collect())
            .collect();
        Ok(SimplicialComplex {
            vertices: self.vertices.clone(),
            facets: maximal_faces(faces),
        })
    }

    /// Faces contained in `sigma` (given as vertex labels).
    pub fn induced_subcomplex<S: AsRef<str>>(&self, sigma: &[S]) -> Result<SimplicialComplex> {
        let idx = sigma
            .iter()
            .map(|s| {
                self.vertex_index(s.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.induced_subcomplex_indices(&idx)
    }

    /// Barycentric subdivision: vertices are the nonempty faces (labelled
    /// `a.b.c`), facets the maximal chains of faces.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let faces: Vec<Face> = self.faces_by_dimension().into_iter().flatten().collect();
        let index: HashMap<&Face, u32> = faces.iter().enumerate().map(|(i, f)| (f, i as u32)).collect();
        let labels: Vec<String> = faces
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&v| self.vertices[v as usize].as_str())
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect();
        let mut chains = Vec::new();
        for facet in &self.facets {
            if facet.is_empty() {
                continue;
            }
            let mut perm: Vec<u32> = facet.to_vec();
            permutations(&mut perm, 0, &mut |order| {
                let mut chain: Face = SmallVec::new();
                let mut acc: Face = SmallVec::new();
                for &v in order {
                    let pos = acc.binary_search(&v).unwrap_err();
                    acc.insert(pos, v);
                    chain.push(index[&acc]);
                }
                chain.sort_unstable();
                chains.push(chain);
            });
        }
        // Chains ending at distinct facets are distinct and never nested.
        SimplicialComplex {
            vertices: labels,
            facets: chains,
        }
    }

    /// Relabels vertices (same order, same count).
    pub fn with_labels<S: Into<String>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.vertices.len() {
            return Err(Error::Argument("label count differs from vertex count".into()));
        }
        check_labels(&labels)?;
        Ok(SimplicialComplex {
            vertices: labels,
            facets: self.facets.clone(),
        })
    }

    /// Canonical form for comparisons: facets sorted.
    pub fn canonical(&self) -> SimplicialComplex {
        let mut facets = self.facets.clone();
        facets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets,
        }
    }

    /// Same complex up to facet order.
    pub fn same_as(&self, other: &SimplicialComplex) -> bool {
        self.vertices == other.vertices && self.canonical().facets == other.canonical().facets
    }
}

fn permutations(items: &mut [u32], k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Inverse Stanley-Reisner correspondence for squarefree ideals.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::SquarefreeRequired(g.to_string()));
    }
    let ctx = ideal.context();
    let labels: Vec<String> = ctx.names().iter().map(|n| vertex_label(n)).collect();
    let n = ctx.len();
    if ideal.is_unit() {
        return SimplicialComplex::void(labels);
    }
    let nonfaces: Vec<Face> = ideal
        .generators()
        .iter()
        .map(|g| g.support().into_iter().map(|v| v as u32).collect())
        .collect();
    // Grow faces level by level; a face extends only by larger vertices, and
    // a set is a face iff it contains no generator support.
    let is_face = |f: &[u32]| !nonfaces.iter().any(|nf| is_subset(nf, f));
    let mut facets = Vec::new();
    let mut level: Vec<Face> = vec![Face::new()];
    while !level.is_empty() {
        let mut next = Vec::new();
        for f in &level {
            let mut extended = false;
            for v in 0..n as u32 {
                if f.binary_search(&v).is_ok() {
                    continue;
                }
                let mut g = f.clone();
                let pos = g.binary_search(&v).unwrap_err();
                g.insert(pos, v);
                if is_face(&g) {
                    extended = true;
                    if v > f.last().copied().unwrap_or(0) || f.is_empty() {
                        next.push(g);
                    }
                }
            }
            if !extended {
                facets.push(f.clone());
            }
        }
        level = next;
    }
    let vertices = labels;
    check_labels(&vertices)?;
    Ok(SimplicialComplex::from_maximal_unchecked(vertices, facets))
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::complex_to_text(self))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex {{ vertices: {:?}, facets: [", self.vertices)?;
        for (k, face) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let labels: Vec<&str> = face.iter().map(|&v| self.vertices[v as usize].as_str()).collect();
            write!(f, "{{{}}}", labels.join(","))?;
        }
        f.write_str("] }")
    }
}
