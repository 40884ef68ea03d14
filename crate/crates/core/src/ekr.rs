//! Exact (strict, t-intersecting) pure-EKR decisions.
//!
//! A t-intersecting family of facets is a clique in the graph on facets where `A ~ B` iff
//! `|A ∩ B| >= t`, so the maximum family is found by an exact maximum-clique search seeded with
//! the largest star as a lower bound.

use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bitset::BitGraph;
use crate::block::Block;
use crate::clique::{for_each_clique_of_size, lex_least_clique, max_clique};
use crate::complex::{minimal_faces, SimplicialComplex};
use crate::error::{EkrError, Result};
use crate::face::Face;
use crate::family::FacetFamily;

/// Default bound on the number of maximum families enumerated for strictness.
pub const DEFAULT_STRICT_CAP: usize = 1_000_000;

/// Default bound on the number of faces for [`max_intersecting_all_faces`].
pub const DEFAULT_FACE_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Explore root branches of the clique search on the rayon pool.
    pub parallel: bool,
    pub strict_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            parallel: true,
            strict_cap: DEFAULT_STRICT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EkrReport {
    pub t: usize,
    #[serde(rename = "max_family")]
    pub max_family_size: usize,
    #[serde(rename = "max_star")]
    pub max_star_size: usize,
    #[serde(rename = "ekr")]
    pub is_ekr: bool,
    #[serde(rename = "strict")]
    pub is_strict: Option<bool>,
    /// Facet indices of the lexicographically least maximum family.
    pub witness_family: Vec<usize>,
    /// The lexicographically least `(t-1)`-face with a largest star.
    pub witness_star_face: Vec<usize>,
    #[serde(rename = "optimum_count")]
    pub max_family_count: Option<usize>,
}

impl EkrReport {
    pub fn witness<'c, B: Block>(&self, host: &'c SimplicialComplex<B>) -> Result<FacetFamily<'c, B>> {
        FacetFamily::new(host, self.witness_family.iter().copied())
    }
}

/// Every two members share at least `t` vertices.
pub fn is_t_intersecting<B: Block>(family: &FacetFamily<'_, B>, t: usize) -> bool {
    family.is_t_intersecting(t)
}

fn check_t<B: Block>(c: &SimplicialComplex<B>, t: usize) -> Result<usize> {
    let dim = c.require_pure()?;
    let max = (dim + 1).max(0) as usize;
    if t == 0 || t > max {
        return Err(EkrError::ThresholdOutOfRange { t, max });
    }
    Ok(max)
}

/// The graph on facet indices with `A ~ B` iff `|A ∩ B| >= t`.
pub fn intersection_graph<B: Block>(c: &SimplicialComplex<B>, t: usize) -> BitGraph {
    let f = c.facets();
    BitGraph::from_predicate(f.len(), |i, j| f[i].intersection_len(&f[j]) >= t)
}

/// Largest star of a `(t-1)`-face, with the lexicographically least such face.
pub fn max_star<B: Block>(c: &SimplicialComplex<B>, t: usize) -> Result<(usize, Face<B>)> {
    check_t(c, t)?;
    let mut counts: HashMap<Face<B>, usize> = HashMap::new();
    for f in c.facets() {
        for s in f.subsets_of_size(t) {
            *counts.entry(s).or_insert(0) += 1;
        }
    }
    counts
        .into_iter()
        .max_by(|(fa, ca), (fb, cb)| ca.cmp(cb).then_with(|| fb.cmp(fa)))
        .map(|(f, n)| (n, f))
        .ok_or(EkrError::EmptyFamily)
}

/// Size of a largest t-intersecting family of facets and the lexicographically least one.
pub fn max_t_intersecting_family<B: Block>(
    c: &SimplicialComplex<B>,
    t: usize,
) -> Result<(usize, FacetFamily<'_, B>)> {
    max_t_intersecting_family_with(c, t, &SearchOptions::default())
}

pub fn max_t_intersecting_family_with<'c, B: Block>(
    c: &'c SimplicialComplex<B>,
    t: usize,
    opts: &SearchOptions,
) -> Result<(usize, FacetFamily<'c, B>)> {
    let (star, _) = max_star(c, t)?;
    let g = intersection_graph(c, t);
    let size = max_clique(&g, star, opts.parallel).size;
    let witness = lex_least_clique(&g, size)
        .ok_or_else(|| EkrError::Internal(format!("no clique of the optimal size {size}")))?;
    Ok((size, FacetFamily::new(c, witness)?))
}

/// Compares the largest t-intersecting family with the largest `(t-1)`-face star.
pub fn is_pure_ekr<B: Block>(c: &SimplicialComplex<B>, t: usize) -> Result<EkrReport> {
    is_pure_ekr_with(c, t, &SearchOptions::default())
}

pub fn is_pure_ekr_with<B: Block>(c: &SimplicialComplex<B>, t: usize, opts: &SearchOptions) -> Result<EkrReport> {
    let (star, star_face) = max_star(c, t)?;
    let (size, family) = max_t_intersecting_family_with(c, t, opts)?;
    debug_assert!(family.is_t_intersecting(t) && family.len() == size);
    Ok(EkrReport {
        t,
        max_family_size: size,
        max_star_size: star,
        is_ekr: size <= star,
        is_strict: None,
        witness_family: family.members().to_vec(),
        witness_star_face: star_face.to_vec(),
        max_family_count: None,
    })
}

/// Counts of maximum t-intersecting families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Census {
    pub families: usize,
    /// Families whose members all contain a common `(t-1)`-face.
    pub stars: usize,
}

/// Enumerates every t-intersecting family of the given (maximum) size. Fails with
/// [`EkrError::CapExceeded`] when more than `cap` exist.
pub fn maximum_family_census<B: Block>(
    c: &SimplicialComplex<B>,
    t: usize,
    size: usize,
    cap: usize,
) -> Result<Census> {
    check_t(c, t)?;
    let g = intersection_graph(c, t);
    let mut stars = 0;
    let visited = for_each_clique_of_size(&g, size, cap, |clique| {
        if common_len(c, clique) >= t {
            stars += 1;
        }
        ControlFlow::Continue(())
    });
    match visited {
        Ok(families) => Ok(Census { families, stars }),
        Err(partial) => Err(EkrError::CapExceeded {
            what: "maximum families",
            limit: cap,
            partial,
        }),
    }
}

fn common_len<B: Block>(c: &SimplicialComplex<B>, members: &[usize]) -> usize {
    members
        .iter()
        .map(|&i| c.facet(i))
        .reduce(|a, b| a.intersection(&b))
        .map_or(0, |f| f.len())
}

/// Like [`is_pure_ekr`], additionally deciding whether every maximum family is a star.
///
/// A complex that is not EKR is reported non-strict without enumeration. If the cap is hit
/// after a non-star maximum family was seen, the report is non-strict with an unknown count;
/// if no non-star was seen the answer is indeterminate and [`EkrError::CapExceeded`] is returned.
pub fn is_strict_pure_ekr<B: Block>(c: &SimplicialComplex<B>, t: usize) -> Result<EkrReport> {
    is_strict_pure_ekr_with(c, t, &SearchOptions::default())
}

pub fn is_strict_pure_ekr_with<B: Block>(
    c: &SimplicialComplex<B>,
    t: usize,
    opts: &SearchOptions,
) -> Result<EkrReport> {
    let mut report = is_pure_ekr_with(c, t, opts)?;
    if !report.is_ekr {
        report.is_strict = Some(false);
        return Ok(report);
    }
    let g = intersection_graph(c, t);
    let mut non_star = false;
    let visited = for_each_clique_of_size(&g, report.max_family_size, opts.strict_cap, |clique| {
        if common_len(c, clique) < t {
            non_star = true;
        }
        ControlFlow::Continue(())
    });
    match visited {
        Ok(count) => {
            report.is_strict = Some(!non_star);
            report.max_family_count = Some(count);
        }
        Err(_) if non_star => report.is_strict = Some(false),
        Err(partial) => {
            return Err(EkrError::CapExceeded {
                what: "maximum families",
                limit: opts.strict_cap,
                partial,
            })
        }
    }
    Ok(report)
}

/// Faces of the host meeting every member of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseFaces<B: Block> {
    pub all: Vec<Face<B>>,
    /// The inclusion-minimal base faces.
    pub minimal: Vec<Face<B>>,
}

impl<B: Block> BaseFaces<B> {
    pub fn min_size(&self) -> usize {
        self.minimal.iter().map(|f| f.len()).min().unwrap_or(0)
    }
}

pub fn base_faces<B: Block>(family: &FacetFamily<'_, B>) -> Result<BaseFaces<B>> {
    if family.is_empty() {
        return Err(EkrError::EmptyFamily);
    }
    let all: Vec<Face<B>> = family
        .host()
        .all_faces()
        .into_iter()
        .filter(|s| family.is_base_face(s))
        .collect();
    let minimal = minimal_faces(all.iter().copied());
    Ok(BaseFaces { all, minimal })
}

/// No two members `B, C` of `family` split the member `a` into the disjoint parts `B ∩ A` and
/// `C ∩ A`. Holds for intersecting families in flag complexes; the family itself is not
/// required to be intersecting, so a corrupted family simply yields `false`.
pub fn check_opposite_partition_lemma<B: Block>(family: &FacetFamily<'_, B>, a: &Face<B>) -> Result<bool> {
    let host = family.host();
    host.require_pure()?;
    if !host.is_flag() {
        return Err(EkrError::NotFlag);
    }
    if !family.contains_face(a) {
        return Err(EkrError::Precondition(format!("{a} is not a member of the family")));
    }
    let parts: Vec<Face<B>> = family.faces().map(|f| f.intersection(a)).collect();
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            if p.is_disjoint(q) && p.union(q) == *a {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Largest intersecting family among all nonempty faces, against the largest vertex star
/// taken over all faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllFacesReport<B: Block> {
    pub max_family: usize,
    pub witness: Vec<Face<B>>,
    pub max_star: usize,
    pub star_vertex: Option<usize>,
}

impl<B: Block> AllFacesReport<B> {
    pub fn is_ekr(&self) -> bool {
        self.max_family <= self.max_star
    }
}

pub fn max_intersecting_all_faces<B: Block>(c: &SimplicialComplex<B>, face_limit: usize) -> Result<AllFacesReport<B>> {
    let faces: Vec<Face<B>> = c.all_faces().into_iter().filter(|f| !f.is_empty()).collect();
    if faces.len() > face_limit {
        return Err(EkrError::CapExceeded {
            what: "faces",
            limit: face_limit,
            partial: faces.len(),
        });
    }
    let (max_star, star_vertex) = c
        .vertices()
        .into_iter()
        .map(|v| (faces.iter().filter(|f| f.contains(v)).count(), v))
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)))
        .map_or((0, None), |(n, v)| (n, Some(v)));
    let g = BitGraph::from_predicate(faces.len(), |i, j| faces[i].intersects(&faces[j]));
    let size = max_clique(&g, max_star, false).size;
    let witness = lex_least_clique(&g, size)
        .ok_or_else(|| EkrError::Internal("no clique of the optimal size".into()))?
        .into_iter()
        .map(|i| faces[i])
        .collect();
    Ok(AllFacesReport {
        max_family: size,
        witness,
        max_star,
        star_vertex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    type C = SimplicialComplex<u64>;

    #[test]
    fn octahedron() {
        let oct: C = crosspolytope_boundary(3).unwrap();
        let r = is_strict_pure_ekr(&oct, 1).unwrap();
        assert_eq!(r.max_family_size, 4);
        assert_eq!(r.max_star_size, 4);
        assert!(r.is_ekr);
        assert_eq!(r.is_strict, Some(false));
        assert_eq!(r.max_family_count, Some(16));
        assert_eq!(r.witness_star_face, vec![0]);
        assert_eq!(maximum_family_census(&oct, 1, 4, 100).unwrap(), Census { families: 16, stars: 6 });
        assert!(matches!(
            maximum_family_census(&oct, 1, 4, 10),
            Err(EkrError::CapExceeded { partial: 10, .. })
        ));
    }

    #[test]
    fn small_counterexamples() {
        let swn: C = simplex_with_neighbors(2).unwrap();
        let r = is_strict_pure_ekr(&swn, 1).unwrap();
        assert_eq!((r.max_family_size, r.max_star_size, r.is_ekr), (4, 3, false));
        assert_eq!(r.is_strict, Some(false));
        let b4: C = crosspolytope_boundary(4).unwrap();
        let r = is_pure_ekr(&b4, 2).unwrap();
        assert_eq!((r.max_family_size, r.max_star_size), (5, 4));
    }

    #[test]
    fn complete_complexes() {
        let k52: C = complete_complex(5, 2).unwrap();
        let r = is_strict_pure_ekr(&k52, 1).unwrap();
        assert_eq!((r.max_family_size, r.max_star_size), (4, 4));
        assert_eq!(r.is_strict, Some(true));
        assert_eq!(r.max_family_count, Some(5));
        // K(4,2): the triangle {01, 02, 12} is as large as a star.
        let r = is_strict_pure_ekr(&complete_complex::<u64>(4, 2).unwrap(), 1).unwrap();
        assert_eq!(r.is_strict, Some(false));
    }

    #[test]
    fn threshold_validation() {
        let oct: C = crosspolytope_boundary(3).unwrap();
        assert!(matches!(max_star(&oct, 0), Err(EkrError::ThresholdOutOfRange { .. })));
        assert!(matches!(max_star(&oct, 4), Err(EkrError::ThresholdOutOfRange { max: 3, .. })));
        assert_eq!(max_star(&oct, 3).unwrap().0, 1);
        let mixed = C::from_vertex_lists(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(is_pure_ekr(&mixed, 1), Err(EkrError::NotPure));
    }

    #[test]
    fn base_faces_of_star() {
        let oct: C = crosspolytope_boundary(3).unwrap();
        let star = oct.star_facets(&Face::singleton(0)).unwrap();
        let b = base_faces(&star).unwrap();
        assert!(b.minimal.contains(&Face::singleton(0)));
        assert_eq!(b.min_size(), 1);
        assert!(star.faces().all(|f| b.all.contains(&f)));
        assert!(check_opposite_partition_lemma(&star, &oct.facet(star.members()[0])).unwrap());
    }

    #[test]
    fn opposite_partition_negative() {
        // In K(4,2) the family {01, 02, 12} is intersecting and 01 ∩ {02, 12} splits 01.
        let k: C = complete_complex(4, 2).unwrap();
        let f = FacetFamily::from_faces(&k, [Face::of(&[0, 1]), Face::of(&[0, 2]), Face::of(&[1, 2])]).unwrap();
        assert_eq!(check_opposite_partition_lemma(&f, &Face::of(&[0, 1])), Err(EkrError::NotFlag));
        let oct: C = crosspolytope_boundary(3).unwrap();
        let bad = FacetFamily::from_faces(&oct, [Face::of(&[0, 2, 4]), Face::of(&[0, 2, 5]), Face::of(&[1, 3, 4])]);
        assert!(!check_opposite_partition_lemma(&bad.unwrap(), &Face::of(&[0, 2, 4])).unwrap());
    }

    #[test]
    fn all_faces_variant() {
        let k42: C = complete_complex(4, 2).unwrap();
        let r = max_intersecting_all_faces(&k42, DEFAULT_FACE_LIMIT).unwrap();
        assert_eq!((r.max_family, r.max_star), (4, 4));
        let c5: C = cycle(5).unwrap();
        let r = max_intersecting_all_faces(&c5, DEFAULT_FACE_LIMIT).unwrap();
        assert_eq!((r.max_family, r.max_star), (3, 3));
        let simplex = C::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        let r = max_intersecting_all_faces(&simplex, DEFAULT_FACE_LIMIT).unwrap();
        assert_eq!((r.max_family, r.max_star), (4, 4));
    }
}
