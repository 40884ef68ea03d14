use std::collections::BTreeSet;

use crate::block::Block;
use crate::error::{EkrError, Result};
use crate::face::Face;
use crate::family::FacetFamily;

/// A finite abstract simplicial complex stored by its facets.
///
/// Facets form a duplicate-free antichain in canonical (lexicographic) order. A complex with
/// no facets at all is the void complex; the complex whose only facet is the empty face is
/// `{∅}`. Both have dimension -1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex<B: Block> {
    n_vertices: usize,
    facets: Vec<Face<B>>,
}

/// Reduces a list of faces to its inclusion-maximal members, in canonical order.
pub(crate) fn maximal_faces<B: Block>(faces: impl IntoIterator<Item = Face<B>>) -> Vec<Face<B>> {
    let mut all: Vec<Face<B>> = faces.into_iter().collect();
    all.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Face<B>> = Vec::with_capacity(all.len());
    for f in all {
        if !kept.iter().any(|k| f.is_subset(k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

/// Reduces a list of faces to its inclusion-minimal members, in canonical order.
pub(crate) fn minimal_faces<B: Block>(faces: impl IntoIterator<Item = Face<B>>) -> Vec<Face<B>> {
    let mut all: Vec<Face<B>> = faces.into_iter().collect();
    all.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Face<B>> = Vec::with_capacity(all.len());
    for f in all {
        if !kept.iter().any(|k| k.is_subset(&f)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl<B: Block> SimplicialComplex<B> {
    /// Canonicalizes `facets` into a complex on `n_vertices` vertices, dropping faces contained
    /// in other inputs.
    pub fn from_facets<I>(n_vertices: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Face<B>>,
    {
        if n_vertices > B::BITS as usize {
            return Err(EkrError::WidthExceeded {
                needed: n_vertices,
                width: B::BITS,
            });
        }
        let facets: Vec<Face<B>> = facets.into_iter().collect();
        for f in &facets {
            if let Some(v) = f.max_vertex() {
                if v >= n_vertices {
                    return Err(EkrError::VertexOutOfRange {
                        vertex: v,
                        n_vertices,
                    });
                }
            }
        }
        Ok(SimplicialComplex {
            n_vertices,
            facets: maximal_faces(facets),
        })
    }

    /// Convenience constructor from vertex lists.
    pub fn from_vertex_lists(n_vertices: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let faces = lists
            .iter()
            .map(|l| Face::new(l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(n_vertices, faces)
    }

    /// The complex with no faces at all.
    pub fn void(n_vertices: usize) -> Self {
        SimplicialComplex {
            n_vertices,
            facets: Vec::new(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[Face<B>] {
        &self.facets
    }

    pub fn facet(&self, index: usize) -> Face<B> {
        self.facets[index]
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Index of `face` in the canonical facet list.
    pub fn facet_index(&self, face: &Face<B>) -> Option<usize> {
        self.facets.binary_search(face).ok()
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn contains(&self, face: &Face<B>) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    pub(crate) fn require_face(&self, face: &Face<B>) -> Result<()> {
        if self.contains(face) {
            Ok(())
        } else {
            Err(EkrError::NotAFace(face.to_string()))
        }
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> Face<B> {
        self.facets
            .iter()
            .fold(Face::empty(), |acc, f| acc.union(f))
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.vertex_set().to_vec()
    }

    /// Dimension of every facet if they agree.
    pub fn pure_dim(&self) -> Option<isize> {
        let mut dims = self.facets.iter().map(|f| f.dim());
        let first = dims.next().unwrap_or(-1);
        dims.all(|d| d == first).then_some(first)
    }

    pub fn is_pure(&self) -> bool {
        self.pure_dim().is_some()
    }

    pub(crate) fn require_pure(&self) -> Result<isize> {
        self.pure_dim().ok_or(EkrError::NotPure)
    }

    /// All faces of dimension `k`, in canonical order.
    pub fn faces_of_dim(&self, k: isize) -> Vec<Face<B>> {
        if k < -1 {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut set = BTreeSet::new();
        for f in &self.facets {
            if f.len() >= size {
                set.extend(f.subsets_of_size(size));
            }
        }
        set.into_iter().collect()
    }

    /// Every face including the empty one, in canonical order.
    pub fn all_faces(&self) -> Vec<Face<B>> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            set.extend(f.all_subsets());
        }
        set.into_iter().collect()
    }

    /// Number of faces, the empty face included.
    pub fn face_count(&self) -> usize {
        self.all_faces().len()
    }

    /// Neighbourhoods in the 1-skeleton, indexed by vertex id.
    pub fn adjacency(&self) -> Vec<Face<B>> {
        let mut adj = vec![Face::empty(); self.n_vertices];
        for f in &self.facets {
            for v in f.iter() {
                adj[v] = adj[v].union(&f.without(v));
            }
        }
        adj
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.contains(&Face::singleton(u).with(v))
    }

    /// Faces containing `sigma`.
    pub fn star(&self, sigma: &Face<B>) -> Result<Vec<Face<B>>> {
        self.require_face(sigma)?;
        let mut set = BTreeSet::new();
        for f in self.facets.iter().filter(|f| sigma.is_subset(f)) {
            let rest = f.difference(sigma);
            set.extend(rest.all_subsets().into_iter().map(|s| s.union(sigma)));
        }
        Ok(set.into_iter().collect())
    }

    /// Facets containing `sigma`.
    pub fn star_facets(&self, sigma: &Face<B>) -> Result<FacetFamily<'_, B>> {
        self.require_face(sigma)?;
        let members = self
            .facets
            .iter()
            .enumerate()
            .filter(|(_, f)| sigma.is_subset(f))
            .map(|(i, _)| i);
        FacetFamily::new(self, members)
    }

    /// Number of facets containing `sigma` (zero when `sigma` is not a face).
    pub fn star_size(&self, sigma: &Face<B>) -> usize {
        self.facets.iter().filter(|f| sigma.is_subset(f)).count()
    }

    /// Faces disjoint from `sigma` whose union with it is a face. Vertex ids are preserved.
    pub fn link(&self, sigma: &Face<B>) -> Result<Self> {
        self.require_face(sigma)?;
        let facets = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(f))
            .map(|f| f.difference(sigma));
        Ok(SimplicialComplex {
            n_vertices: self.n_vertices,
            facets: maximal_faces(facets),
        })
    }

    /// Subcomplex of faces all of whose vertices lie in `w`.
    pub fn induced_subcomplex(&self, w: &Face<B>) -> Self {
        SimplicialComplex {
            n_vertices: self.n_vertices,
            facets: maximal_faces(self.facets.iter().map(|f| f.intersection(w))),
        }
    }

    /// Whether `sub` is the subcomplex induced on its own vertex set.
    pub fn is_induced_subcomplex(&self, sub: &Self) -> bool {
        sub.facets.iter().all(|f| self.contains(f))
            && self.induced_subcomplex(&sub.vertex_set()).facets == sub.facets
    }

    /// The complex of faces spanned by the common neighbours of `a` and `b`.
    pub fn lkcap(&self, a: usize, b: usize) -> Result<Self> {
        let verts = self.vertex_set();
        if a == b {
            return Err(EkrError::Precondition(format!("lkcap needs distinct vertices, got {a} twice")));
        }
        for v in [a, b] {
            if !verts.contains(v) {
                return Err(EkrError::NotAFace(format!("{{{v}}}")));
            }
        }
        let adj = self.adjacency();
        Ok(self.induced_subcomplex(&adj[a].intersection(&adj[b])))
    }

    /// All faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> Result<Self> {
        let dim = self.dim();
        if k > dim || k < -1 {
            return Err(EkrError::DimensionOutOfRange { requested: k, dim });
        }
        let size = (k + 1) as usize;
        let mut faces = Vec::new();
        for f in &self.facets {
            if f.len() > size {
                faces.extend(f.subsets_of_size(size));
            } else {
                faces.push(*f);
            }
        }
        Ok(SimplicialComplex {
            n_vertices: self.n_vertices,
            facets: maximal_faces(faces),
        })
    }

    /// Faces belonging to both complexes.
    pub fn intersection(&self, other: &Self) -> Self {
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                faces.push(f.intersection(g));
            }
        }
        SimplicialComplex {
            n_vertices: self.n_vertices.max(other.n_vertices),
            facets: maximal_faces(faces),
        }
    }

    /// Simplicial join; `other`'s vertex ids are shifted past this complex's.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let offset = self.n_vertices;
        let n = offset + other.n_vertices;
        if n > B::BITS as usize {
            return Err(EkrError::WidthExceeded {
                needed: n,
                width: B::BITS,
            });
        }
        let shifted: Vec<Face<B>> = other
            .facets
            .iter()
            .map(|g| {
                if g.is_empty() {
                    *g
                } else {
                    Face::from_bits(g.bits() << offset)
                }
            })
            .collect();
        let mut facets = Vec::with_capacity(self.facets.len() * shifted.len());
        for f in &self.facets {
            for g in &shifted {
                facets.push(f.union(g));
            }
        }
        facets.sort();
        Ok(SimplicialComplex {
            n_vertices: n,
            facets,
        })
    }

    /// Relabels vertices through `map`, which must be injective on the vertex set.
    pub fn relabel(&self, n_vertices: usize, map: impl Fn(usize) -> Option<usize>) -> Result<Self> {
        let facets = self
            .facets
            .iter()
            .map(|f| f.map_vertices(&map))
            .collect::<Result<Vec<_>>>()?;
        if facets.iter().zip(&self.facets).any(|(g, f)| g.len() != f.len()) {
            return Err(EkrError::InvalidParameters("relabeling is not injective".into()));
        }
        Self::from_facets(n_vertices, facets)
    }

    /// Renumbers the used vertices to `0..k` in increasing order. Returns the new complex and
    /// the old id of every new vertex.
    pub fn compact(&self) -> (Self, Vec<usize>) {
        let old = self.vertices();
        let mut new_of = vec![usize::MAX; self.n_vertices];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let c = self
            .relabel(old.len(), |v| Some(new_of[v]))
            .expect("compaction is a bijection onto 0..k");
        (c, old)
    }
}
