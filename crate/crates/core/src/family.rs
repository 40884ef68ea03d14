use crate::block::Block;
use crate::complex::SimplicialComplex;
use crate::error::{EkrError, Result};
use crate::face::Face;

/// A set of facets of a host complex, stored as sorted facet indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetFamily<'c, B: Block> {
    host: &'c SimplicialComplex<B>,
    members: Vec<usize>,
}

impl<'c, B: Block> FacetFamily<'c, B> {
    pub fn new(host: &'c SimplicialComplex<B>, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&index) = members.iter().find(|&&i| i >= host.num_facets()) {
            return Err(EkrError::FacetIndexOutOfRange {
                index,
                len: host.num_facets(),
            });
        }
        Ok(FacetFamily { host, members })
    }

    /// Family of the given facets, each of which must be a facet of `host`.
    pub fn from_faces(host: &'c SimplicialComplex<B>, faces: impl IntoIterator<Item = Face<B>>) -> Result<Self> {
        let idx = faces
            .into_iter()
            .map(|f| {
                host.facet_index(&f)
                    .ok_or_else(|| EkrError::NotAFace(format!("{f} is not a facet")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(host, idx)
    }

    pub fn host(&self) -> &'c SimplicialComplex<B> {
        self.host
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn contains_face(&self, face: &Face<B>) -> bool {
        self.host.facet_index(face).is_some_and(|i| self.contains(i))
    }

    pub fn faces(&self) -> impl Iterator<Item = Face<B>> + '_ {
        self.members.iter().map(|&i| self.host.facet(i))
    }

    /// Members containing every vertex of `tau`.
    pub fn restricted_to_star(&self, tau: &Face<B>) -> Self {
        FacetFamily {
            host: self.host,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&i| tau.is_subset(&self.host.facet(i)))
                .collect(),
        }
    }

    /// Every two members share at least `t` vertices.
    pub fn is_t_intersecting(&self, t: usize) -> bool {
        let faces: Vec<Face<B>> = self.faces().collect();
        faces
            .iter()
            .enumerate()
            .all(|(i, a)| faces[i + 1..].iter().all(|b| a.intersection_len(b) >= t))
    }

    pub fn is_intersecting(&self) -> bool {
        self.is_t_intersecting(1)
    }

    /// Intersection of all members (the empty face for an empty family).
    pub fn common_vertices(&self) -> Face<B> {
        let mut it = self.faces();
        match it.next() {
            None => Face::empty(),
            Some(first) => it.fold(first, |acc, f| acc.intersection(&f)),
        }
    }

    /// `sigma` meets every member.
    pub fn is_base_face(&self, sigma: &Face<B>) -> bool {
        self.faces().all(|f| f.intersects(sigma))
    }
}
