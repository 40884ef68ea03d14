//! Contraction of a face in a flag complex, its outerlink and the sectors of the outerlink.

use crate::block::Block;
use crate::complex::{maximal_faces, SimplicialComplex};
use crate::error::{EkrError, Result};
use crate::face::Face;

impl<B: Block> SimplicialComplex<B> {
    fn require_flag_face(&self, sigma: &Face<B>) -> Result<()> {
        self.require_face(sigma)?;
        if sigma.is_empty() {
            return Err(EkrError::Precondition("face must be nonempty".into()));
        }
        if !self.is_flag() {
            return Err(EkrError::NotFlag);
        }
        Ok(())
    }

    /// Identifies `sigma` to a single new vertex with id `n_vertices()`. Returns the contracted
    /// complex (on `n_vertices() + 1` vertices) and the new vertex.
    pub fn contract(&self, sigma: &Face<B>) -> Result<(Self, usize)> {
        self.require_flag_face(sigma)?;
        let v_new = self.n_vertices();
        if v_new >= B::BITS as usize {
            return Err(EkrError::WidthExceeded {
                needed: v_new + 1,
                width: B::BITS,
            });
        }
        let mut images: Vec<Face<B>> = self
            .facets()
            .iter()
            .map(|f| {
                if f.intersects(sigma) {
                    f.difference(sigma).with(v_new)
                } else {
                    *f
                }
            })
            .collect();
        images.sort();
        if images.windows(2).any(|w| w[0] == w[1]) {
            return Err(EkrError::Internal(
                "contraction of a flag complex produced parallel simplices".into(),
            ));
        }
        let c = SimplicialComplex::from_facets(v_new + 1, images)?;
        Ok((c, v_new))
    }

    /// Faces disjoint from `sigma` that span a face together with some vertex of `sigma`.
    pub fn outerlink(&self, sigma: &Face<B>) -> Result<Self> {
        self.require_flag_face(sigma)?;
        let facets = self
            .facets()
            .iter()
            .filter(|f| f.intersects(sigma))
            .map(|f| f.difference(sigma));
        SimplicialComplex::from_facets(self.n_vertices(), maximal_faces(facets))
    }

    /// The part of the outerlink of `sigma` seen from `a ∈ sigma`: the link of `a` minus `sigma`.
    pub fn sector(&self, sigma: &Face<B>, a: usize) -> Result<Self> {
        self.require_flag_face(sigma)?;
        if !sigma.contains(a) {
            return Err(EkrError::Precondition(format!("vertex {a} is not in {sigma}")));
        }
        let facets = self
            .facets()
            .iter()
            .filter(|f| f.contains(a))
            .map(|f| f.difference(sigma));
        SimplicialComplex::from_facets(self.n_vertices(), maximal_faces(facets))
    }

    /// Intersection of the sectors of all vertices of `tau ⊆ sigma`.
    pub fn sector_intersection(&self, sigma: &Face<B>, tau: &Face<B>) -> Result<Self> {
        if tau.is_empty() || !tau.is_subset(sigma) {
            return Err(EkrError::Precondition(format!(
                "{tau} must be a nonempty subset of {sigma}"
            )));
        }
        let mut verts = tau.iter();
        let first = verts.next().expect("tau is nonempty");
        let mut acc = self.sector(sigma, first)?;
        for a in verts {
            acc = acc.intersection(&self.sector(sigma, a)?);
        }
        Ok(acc)
    }
}
