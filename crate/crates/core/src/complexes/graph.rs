use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{Monomial, MonomialIdeal, VariableContext};

use super::complex::variable_name;

/// Simple graph: no loops, no repeated edges. Edges are stored as `(a, b)`
/// with `a < b`, in first-seen order.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut labels = BTreeSet::new();
        for v in &vertices {
            if v.is_empty() || v.chars().any(char::is_whitespace) || !labels.insert(v.as_str()) {
                return Err(Error::Argument(format!("invalid or duplicate vertex label `{v}`")));
            }
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (a, b) in edges {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::UnknownVertex(format!("#{}", a.max(b) + 1)));
            }
            if a == b {
                return Err(Error::Argument(format!("loop at vertex `{}`", vertices[a])));
            }
            let e = (a.min(b), a.max(b));
            if seen.insert(e) {
                out.push(e);
            }
        }
        Ok(Graph { vertices, edges: out })
    }

    /// Vertices labelled `1..=n`, edges given 1-based.
    pub fn numbered(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::Argument("vertex numbering starts at 1".into()));
        }
        Graph::new((1..=n).map(|i| i.to_string()), edges.iter().map(|&(a, b)| (a - 1, b - 1)))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(x_i x_j : {i,j} ∈ E)`, one variable per vertex.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let ctx = VariableContext::new(self.vertices.iter().map(|v| variable_name(v)))
            .expect("vertex labels map to distinct variable names");
        let gens = self.edges.iter().map(|&(a, b)| {
            let mut e = vec![0u32; ctx.len()];
            e[a] = 1;
            e[b] = 1;
            Monomial::from_exponents(&ctx, e).expect("sized to context")
        });
        MonomialIdeal::minimalize(&ctx, gens).expect("single context")
    }

    /// Next unused numeric label (`n+1` when the labels are `1..=n`).
    fn fresh_label(&self, skip: usize) -> String {
        let top = self
            .vertices
            .iter()
            .filter_map(|v| v.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        (top + 1 + skip).to_string()
    }

    /// Adds one vertex adjacent to every existing vertex.
    pub fn cone(&self, apex: Option<&str>) -> Result<Graph> {
        let apex = apex.map(str::to_string).unwrap_or_else(|| self.fresh_label(0));
        let mut vertices = self.vertices.clone();
        vertices.push(apex);
        let n = self.vertices.len();
        let edges = self.edges.iter().copied().chain((0..n).map(|v| (v, n)));
        Graph::new(vertices, edges)
    }

    /// Adds two fresh vertices joined by a single edge.
    pub fn disjoint_edge(&self, labels: Option<(&str, &str)>) -> Result<Graph> {
        let (a, b) = match labels {
            Some((a, b)) => (a.to_string(), b.to_string()),
            None => (self.fresh_label(0), self.fresh_label(1)),
        };
        let mut vertices = self.vertices.clone();
        vertices.push(a);
        vertices.push(b);
        let n = self.vertices.len();
        let edges = self.edges.iter().copied().chain(std::iter::once((n, n + 1)));
        Graph::new(vertices, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::graph_to_text(self))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(a, b)| format!("{}-{}", self.vertices[a], self.vertices[b]))
            .collect();
        write!(f, "Graph {{ vertices: {:?}, edges: [{}] }}", self.vertices, edges.join(", "))
    }
}
