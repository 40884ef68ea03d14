use std::cmp::Ordering;
use std::fmt;

use crate::block::Block;
use crate::error::{EkrError, Result};

/// A finite set of vertices stored as a bit vector.
///
/// Faces order lexicographically by their sorted vertex lists, so `{0,1} < {0,1,2} < {0,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face<B: Block> {
    bits: B,
}

impl<B: Block> Face<B> {
    /// Number of distinct vertex ids this face type can hold.
    pub const WIDTH: u32 = B::BITS;

    pub fn empty() -> Self {
        Face { bits: B::zero() }
    }

    pub fn from_bits(bits: B) -> Self {
        Face { bits }
    }

    pub fn bits(&self) -> B {
        self.bits
    }

    /// Builds a face, rejecting duplicate or too-large vertex ids.
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = B::zero();
        for v in vertices {
            if v >= B::BITS as usize {
                return Err(EkrError::WidthExceeded {
                    needed: v + 1,
                    width: B::BITS,
                });
            }
            let b = B::bit(v);
            if bits & b != B::zero() {
                return Err(EkrError::DuplicateVertex(v));
            }
            bits = bits | b;
        }
        Ok(Face { bits })
    }

    /// Like [`Face::new`] but panics on bad input; meant for literals in tests and generators.
    pub fn of(vertices: &[usize]) -> Self {
        Self::new(vertices.iter().copied()).expect("invalid face literal")
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < B::BITS as usize, "vertex {v} exceeds face width");
        Face { bits: B::bit(v) }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == B::zero()
    }

    /// `|vertices| - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.len() as isize - 1
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < B::BITS as usize && self.bits & B::bit(v) != B::zero()
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == B::zero()
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == B::zero()
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        Face {
            bits: self.bits & other.bits,
        }
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        Face {
            bits: self.bits | other.bits,
        }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        Face {
            bits: self.bits & !other.bits,
        }
    }

    #[inline]
    pub fn intersection_len(&self, other: &Self) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    pub fn with(&self, v: usize) -> Self {
        self.union(&Face::singleton(v))
    }

    pub fn without(&self, v: usize) -> Self {
        if v >= B::BITS as usize {
            return *self;
        }
        Face {
            bits: self.bits & !B::bit(v),
        }
    }

    /// Smallest vertex, if any.
    pub fn min_vertex(&self) -> Option<usize> {
        (!self.is_empty()).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Largest vertex, if any.
    pub fn max_vertex(&self) -> Option<usize> {
        (!self.is_empty()).then(|| (B::BITS - 1 - self.bits.leading_zeros()) as usize)
    }

    /// Vertices in ascending order.
    pub fn iter(&self) -> FaceIter<B> {
        FaceIter { rest: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of this face with exactly `k` vertices, in canonical order.
    pub fn subsets_of_size(&self, k: usize) -> Vec<Self> {
        use itertools::Itertools;
        let verts = self.to_vec();
        if k > verts.len() {
            return Vec::new();
        }
        let mut out: Vec<Self> = verts
            .into_iter()
            .combinations(k)
            .map(|c| Face::of(&c))
            .collect();
        out.sort();
        out
    }

    /// Every subset (including the empty face and the face itself).
    pub fn all_subsets(&self) -> Vec<Self> {
        let verts = self.to_vec();
        let mut out = Vec::with_capacity(1 << verts.len());
        for mask in 0u64..(1u64 << verts.len()) {
            let mut bits = B::zero();
            for (i, &v) in verts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    bits = bits | B::bit(v);
                }
            }
            out.push(Face { bits });
        }
        out
    }

    /// Applies a vertex relabeling; vertices missing from the map are an error.
    pub fn map_vertices(&self, map: impl Fn(usize) -> Option<usize>) -> Result<Self> {
        let mut out = Vec::with_capacity(self.len());
        for v in self.iter() {
            out.push(map(v).ok_or_else(|| EkrError::NotAFace(format!("vertex {v} unmapped")))?);
        }
        Self::new(out)
    }
}

impl<B: Block> Ord for Face<B> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl<B: Block> PartialOrd for Face<B> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<B: Block> fmt::Debug for Face<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<B: Block> fmt::Display for Face<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl<B: Block> IntoIterator for &Face<B> {
    type Item = usize;
    type IntoIter = FaceIter<B>;

    fn into_iter(self) -> FaceIter<B> {
        self.iter()
    }
}

pub struct FaceIter<B: Block> {
    rest: B,
}

impl<B: Block> Iterator for FaceIter<B> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.rest == B::zero() {
            return None;
        }
        let v = self.rest.trailing_zeros() as usize;
        self.rest = self.rest & (self.rest - B::one());
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.rest.count_ones() as usize;
        (n, Some(n))
    }
}

impl<B: Block> ExactSizeIterator for FaceIter<B> {}
