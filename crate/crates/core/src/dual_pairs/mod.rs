//! Upper sets of faces, intersecting duals and dual pairs.
//!
//! An upper set is kept as its antichain of minimal faces. Duals are computed as the minimal
//! transversals of that antichain which are faces of the host.

mod classify;
mod enumerate;
mod flip;
mod iso;

use serde::{Deserialize, Serialize};

use crate::block::Block;
use crate::complex::{minimal_faces, SimplicialComplex};
use crate::error::{EkrError, Result};
use crate::face::Face;
use crate::family::FacetFamily;

pub use classify::{classify_1d, Classification, DualPairType};
pub use enumerate::{check_crosspolytope_conjecture, enumerate_dual_pairs, ConjectureCheck, DualPairClasses, EnumerationCaps};
pub use flip::{reduce_base_edge, vertex_flip, Flip, Reduction};
pub use iso::{canonical_form, dual_pairs_isomorphic, CanonicalForm, DEFAULT_PERMUTATION_CAP};

/// An upward-closed family of faces of `host`, given by its minimal elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperSet<'h, B: Block> {
    host: &'h SimplicialComplex<B>,
    minimal: Vec<Face<B>>,
}

impl<'h, B: Block> UpperSet<'h, B> {
    /// The upper set generated by `generators`, each of which must be a face of `host`.
    pub fn generated_by(host: &'h SimplicialComplex<B>, generators: impl IntoIterator<Item = Face<B>>) -> Result<Self> {
        let gens: Vec<Face<B>> = generators.into_iter().collect();
        for g in &gens {
            host.require_face(g)?;
        }
        Ok(UpperSet {
            host,
            minimal: minimal_faces(gens),
        })
    }

    /// The empty upper set.
    pub fn empty(host: &'h SimplicialComplex<B>) -> Self {
        UpperSet {
            host,
            minimal: Vec::new(),
        }
    }

    /// Every face of the host, i.e. the upper set generated by the empty face.
    pub fn full(host: &'h SimplicialComplex<B>) -> Self {
        let minimal = if host.is_void() { Vec::new() } else { vec![Face::empty()] };
        UpperSet { host, minimal }
    }

    pub fn host(&self) -> &'h SimplicialComplex<B> {
        self.host
    }

    pub fn minimal_elements(&self) -> &[Face<B>] {
        &self.minimal
    }

    pub fn is_empty(&self) -> bool {
        self.minimal.is_empty()
    }

    pub fn contains(&self, sigma: &Face<B>) -> bool {
        self.host.contains(sigma) && self.minimal.iter().any(|m| m.is_subset(sigma))
    }

    /// Union of the minimal elements.
    pub fn essential_vertices(&self) -> Face<B> {
        self.minimal.iter().fold(Face::empty(), |acc, m| acc.union(m))
    }

    /// Every member, in canonical order.
    pub fn members(&self) -> Vec<Face<B>> {
        self.host
            .all_faces()
            .into_iter()
            .filter(|f| self.minimal.iter().any(|m| m.is_subset(f)))
            .collect()
    }

    /// The faces of the host meeting every member.
    pub fn intersecting_dual(&self) -> Self {
        UpperSet {
            host: self.host,
            minimal: transversal_faces(self.host, &self.minimal),
        }
    }

    pub fn cross_intersects(&self, other: &Self) -> bool {
        self.minimal
            .iter()
            .all(|m| other.minimal.iter().all(|n| m.intersects(n)))
    }
}

/// Minimal faces of `host` that meet every set in `sets`.
pub(crate) fn transversal_faces<B: Block>(host: &SimplicialComplex<B>, sets: &[Face<B>]) -> Vec<Face<B>> {
    fn go<B: Block>(host: &SimplicialComplex<B>, sets: &[Face<B>], chosen: Face<B>, out: &mut Vec<Face<B>>) {
        match sets.iter().find(|s| !s.intersects(&chosen)) {
            None => out.push(chosen),
            Some(s) => {
                for v in s.iter() {
                    let next = chosen.with(v);
                    if host.contains(&next) {
                        go(host, sets, next, out);
                    }
                }
            }
        }
    }
    if host.is_void() {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(host, sets, Face::empty(), &mut out);
    minimal_faces(out)
}

/// Same as [`UpperSet::generated_by`].
pub fn upper_closure<'h, B: Block>(
    host: &'h SimplicialComplex<B>,
    generators: impl IntoIterator<Item = Face<B>>,
) -> Result<UpperSet<'h, B>> {
    UpperSet::generated_by(host, generators)
}

pub fn intersecting_dual<'h, B: Block>(u: &UpperSet<'h, B>) -> UpperSet<'h, B> {
    u.intersecting_dual()
}

pub fn essential_vertices<B: Block>(u: &UpperSet<'_, B>) -> Face<B> {
    u.essential_vertices()
}

/// Two upper sets, each the intersecting dual of the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPair<'h, B: Block> {
    u1: UpperSet<'h, B>,
    u2: UpperSet<'h, B>,
}

impl<'h, B: Block> DualPair<'h, B> {
    /// Validates `u1 = u2*` and `u2 = u1*`.
    pub fn new(u1: UpperSet<'h, B>, u2: UpperSet<'h, B>) -> Result<Self> {
        if u1.host != u2.host {
            return Err(EkrError::HostMismatch);
        }
        if u1.intersecting_dual() != u2 || u2.intersecting_dual() != u1 {
            return Err(EkrError::Precondition("the upper sets are not dual to each other".into()));
        }
        Ok(DualPair { u1, u2 })
    }

    pub fn host(&self) -> &'h SimplicialComplex<B> {
        self.u1.host
    }

    pub fn u1(&self) -> &UpperSet<'h, B> {
        &self.u1
    }

    pub fn u2(&self) -> &UpperSet<'h, B> {
        &self.u2
    }

    /// `E(U1)`, which equals `E(U2)` for a dual pair.
    pub fn essential_vertices(&self) -> Face<B> {
        self.u1.essential_vertices()
    }

    pub fn swapped(&self) -> Self {
        DualPair {
            u1: self.u2.clone(),
            u2: self.u1.clone(),
        }
    }

    pub fn to_json(&self) -> DualPairJson {
        DualPairJson {
            u1_min: self.u1.minimal.iter().map(Face::to_vec).collect(),
            u2_min: self.u2.minimal.iter().map(Face::to_vec).collect(),
        }
    }
}

/// Serialized form of a [`DualPair`]: the minimal elements of both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPairJson {
    pub u1_min: Vec<Vec<usize>>,
    pub u2_min: Vec<Vec<usize>>,
}

/// `(U**, U*)`.
pub fn dual_pair_of<'h, B: Block>(u: &UpperSet<'h, B>) -> DualPair<'h, B> {
    let u2 = u.intersecting_dual();
    let u1 = u2.intersecting_dual();
    debug_assert_eq!(u1.intersecting_dual(), u2);
    DualPair { u1, u2 }
}

/// `{A ∩ V(lkcap(a, b)) : A ∈ F, a ∈ A, b ∉ A}` in canonical order.
pub fn restrict_family<B: Block>(family: &FacetFamily<'_, B>, a: usize, b: usize) -> Result<Vec<Face<B>>> {
    let lk = family.host().lkcap(a, b)?;
    Ok(restrict_to(family, a, b, &lk.vertex_set()))
}

pub(crate) fn restrict_to<B: Block>(family: &FacetFamily<'_, B>, a: usize, b: usize, w: &Face<B>) -> Vec<Face<B>> {
    let mut out: Vec<Face<B>> = family
        .faces()
        .filter(|f| f.contains(a) && !f.contains(b))
        .map(|f| f.intersection(w))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Whether `pair` (on the host `lkcap(a, b)`) contains both restrictions of `family`, with
/// `u1` on the side of `a`. Defined for non-adjacent `a, b` as well.
pub fn supports_at<B: Block>(pair: &DualPair<'_, B>, family: &FacetFamily<'_, B>, a: usize, b: usize) -> Result<bool> {
    let lk = family.host().lkcap(a, b)?;
    if *pair.host() != lk {
        return Err(EkrError::HostMismatch);
    }
    let w = lk.vertex_set();
    Ok(restrict_to(family, a, b, &w).iter().all(|f| pair.u1.contains(f))
        && restrict_to(family, b, a, &w).iter().all(|f| pair.u2.contains(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    type C = SimplicialComplex<u64>;
    type F = Face<u64>;

    fn brute_dual(host: &C, members: &[F]) -> Vec<F> {
        host.all_faces()
            .into_iter()
            .filter(|f| members.iter().all(|m| m.intersects(f)))
            .collect()
    }

    #[test]
    fn trivial_duals() {
        let oct: C = crosspolytope_boundary(3).unwrap();
        let empty = UpperSet::empty(&oct);
        let full = UpperSet::full(&oct);
        assert_eq!(empty.intersecting_dual(), full);
        assert_eq!(full.intersecting_dual(), empty);
        assert_eq!(full.members().len(), oct.face_count());
        let v = UpperSet::generated_by(&oct, [F::of(&[0])]).unwrap();
        assert_eq!(v.intersecting_dual(), v);
        let reduced = UpperSet::generated_by(&oct, [F::of(&[0, 2]), F::of(&[0])]).unwrap();
        assert_eq!(reduced.minimal_elements(), &[F::of(&[0])]);
        assert!(UpperSet::generated_by(&oct, [F::of(&[0, 1])]).is_err());
    }

    #[test]
    fn four_cycle_dual() {
        // cycle(4) has edges 01, 12, 23, 03, i.e. u, v, w, x = 0, 1, 2, 3.
        let c4: C = cycle(4).unwrap();
        let u = UpperSet::generated_by(&c4, [F::of(&[0, 1]), F::of(&[2, 3])]).unwrap();
        let d = u.intersecting_dual();
        assert_eq!(d.minimal_elements(), &[F::of(&[0, 3]), F::of(&[1, 2])]);
        assert_eq!(d.members(), brute_dual(&c4, &u.members()));
        assert!(DualPair::new(u, d).is_ok());
    }

    #[test]
    fn simplex_skeleton_duals() {
        for d in 1..6usize {
            let simplex = C::from_vertex_lists(d + 1, &[(0..=d).collect()]).unwrap();
            for k in 0..=d {
                let u = UpperSet::generated_by(&simplex, simplex.faces_of_dim(k as isize)).unwrap();
                let dual = u.intersecting_dual();
                assert_eq!(dual.minimal_elements(), simplex.faces_of_dim((d - k) as isize));
            }
        }
    }

    #[test]
    fn dual_pair_collapse() {
        // F_ab| = {u} and F_ba| = {uv} give different supporting pairs.
        let c5: C = cycle(5).unwrap();
        let pu = dual_pair_of(&UpperSet::generated_by(&c5, [F::of(&[0])]).unwrap());
        assert_eq!(pu.u1().minimal_elements(), &[F::of(&[0])]);
        assert_eq!(pu.u2().minimal_elements(), &[F::of(&[0])]);
        let puv = dual_pair_of(&UpperSet::generated_by(&c5, [F::of(&[0, 1])]).unwrap());
        assert_eq!(puv.u1().minimal_elements(), &[F::of(&[0, 1])]);
        assert_eq!(puv.u2().minimal_elements(), &[F::of(&[0]), F::of(&[1])]);
        let trivial = dual_pair_of(&UpperSet::empty(&c5));
        assert!(trivial.u1().is_empty());
        assert_eq!(trivial.u2(), &UpperSet::full(&c5));
    }

    #[test]
    fn restriction_and_support() {
        let oct: C = crosspolytope_boundary(3).unwrap();
        let star = oct.star_facets(&F::of(&[2])).unwrap();
        assert!(restrict_family(&star, 0, 2).unwrap().is_empty());
        let fam = FacetFamily::new(&oct, 0..oct.num_facets()).unwrap();
        let lk = oct.lkcap(0, 2).unwrap();
        let ra = restrict_family(&fam, 0, 2).unwrap();
        let p = dual_pair_of(&UpperSet::generated_by(&lk, ra).unwrap());
        // the whole octahedron is not intersecting, but the definition still applies
        let _ = supports_at(&p, &fam, 0, 2).unwrap();
        let wrong_host = dual_pair_of(&UpperSet::empty(&oct));
        assert_eq!(supports_at(&wrong_host, &fam, 0, 2), Err(EkrError::HostMismatch));
    }
}
