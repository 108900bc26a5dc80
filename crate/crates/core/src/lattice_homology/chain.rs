use std::collections::HashMap;

use crate::complexes::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::SparseIntMatrix;

/// Augmented simplicial chain complex of a complex.
///
/// `basis[0]` is the empty face (absent for the void complex) and
/// `basis[d + 1]` lists the `d`-faces. `boundary[d + 1]` is `∂_d`, mapping
/// `d`-chains to `(d-1)`-chains; deleting the `j`-th smallest vertex carries
/// the sign `(-1)^j`. `boundary[0]` is the zero map out of the empty face.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    basis: Vec<Vec<Face>>,
    boundary: Vec<SparseIntMatrix>,
}

impl ChainComplex {
    /// Fails with a resource error when the complex has more than
    /// `max_faces` faces.
    pub fn new(complex: &SimplicialComplex, max_faces: usize) -> Result<Self> {
        if complex.is_void() {
            return Ok(ChainComplex {
                basis: Vec::new(),
                boundary: Vec::new(),
            });
        }
        let faces = complex
            .faces_by_dimension_limited(max_faces)
            .ok_or_else(|| Error::Resource(format!("complex has more than {max_faces} faces")))?;
        let mut basis = vec![vec![Face::new()]];
        basis.extend(faces);
        let mut boundary = vec![SparseIntMatrix::zeros(0, 1)];
        for k in 1..basis.len() {
            let lower: HashMap<&Face, u32> = basis[k - 1].iter().enumerate().map(|(i, f)| (f, i as u32)).collect();
            let cols = basis[k]
                .iter()
                .map(|f| {
                    let mut col: Vec<(u32, i64)> = (0..f.len())
                        .map(|j| {
                            let mut g = f.clone();
                            g.remove(j);
                            (lower[&g], if j % 2 == 0 { 1 } else { -1 })
                        })
                        .collect();
                    col.sort_unstable_by_key(|e| e.0);
                    col
                })
                .collect();
            boundary.push(SparseIntMatrix::from_columns(basis[k - 1].len(), cols));
        }
        Ok(ChainComplex { basis, boundary })
    }

    /// Chain groups including the augmentation (0 for the void complex).
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis of the chain group in dimension `d >= -1`.
    pub fn basis(&self, d: isize) -> &[Face] {
        self.basis.get((d + 1) as usize).map_or(&[], Vec::as_slice)
    }

    /// `∂_d` for `d >= -1`.
    pub fn boundary(&self, d: isize) -> Option<&SparseIntMatrix> {
        self.boundary.get((d + 1) as usize)
    }

    pub(crate) fn boundaries(&self) -> &[SparseIntMatrix] {
        &self.boundary
    }

    pub(crate) fn rank_sizes(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    /// Checks `∂_{d-1} ∘ ∂_d = 0` for every consecutive pair by sparse
    /// multiplication.
    pub fn boundary_squared_vanishes(&self) -> bool {
        self.boundary
            .windows(2)
            .all(|w| w[0].checked_mul(&w[1]).is_some_and(|p| p.is_zero()))
    }

    /// Debug export of `∂_d` as `row col value` triples.
    pub fn export(&self, d: isize) -> Option<String> {
        self.boundary(d).map(SparseIntMatrix::to_triples)
    }
}
