use super::{dual_pair_of, restrict_to, supports_at, DualPair, UpperSet};
use crate::block::Block;
use crate::complex::{minimal_faces, SimplicialComplex};
use crate::error::{EkrError, Result};
use crate::face::Face;
use crate::family::FacetFamily;

fn pre(msg: impl Into<String>) -> EkrError {
    EkrError::Precondition(msg.into())
}

/// Result of one vertex flip.
#[derive(Clone, Debug)]
pub struct Flip<'c, 'h, B: Block> {
    pub family: FacetFamily<'c, B>,
    pub pair: DualPair<'h, B>,
    /// The vertex of `{a, b}` whose side supplied the new facets.
    pub exchanged_side: usize,
    pub removed: Vec<Face<B>>,
    pub added: Vec<Face<B>>,
}

/// Facets `A` of `side` (all containing `x`, avoiding `y`) such that some minimal element of
/// `other` meets `A` exactly in `{v}`.
fn r_set<B: Block>(family: &FacetFamily<'_, B>, x: usize, y: usize, other: &UpperSet<'_, B>, v: usize) -> Vec<Face<B>> {
    let single = Face::singleton(v);
    family
        .faces()
        .filter(|f| f.contains(x) && !f.contains(y))
        .filter(|f| other.minimal_elements().iter().any(|m| m.intersection(f) == single))
        .collect()
}

/// The least exchange partner `u` for `v` across the ridge `facet ∖ v`: `(facet ∖ v) ∪ u` is a
/// facet and `uv` is not an edge.
fn exchange<B: Block>(host: &SimplicialComplex<B>, adj: &[Face<B>], facet: &Face<B>, v: usize) -> Option<Face<B>> {
    let ridge = facet.without(v);
    host.facets()
        .iter()
        .filter(|g| ridge.is_subset(g) && *g != facet)
        .filter_map(|g| {
            let u = g.difference(&ridge).min_vertex()?;
            (!adj[v].contains(u)).then_some((u, *g))
        })
        .min_by_key(|(u, _)| *u)
        .map(|(_, g)| g)
}

fn check_common<B: Block>(family: &FacetFamily<'_, B>, sigma: &Face<B>, a: usize, b: usize) -> Result<()> {
    let host = family.host();
    host.require_pure()?;
    if a == b || !sigma.contains(a) || !sigma.contains(b) {
        return Err(pre(format!("{{{a},{b}}} must be two distinct vertices of {sigma}")));
    }
    host.require_face(sigma)?;
    if !host.has_missing_edge_exchange()? {
        return Err(pre("host lacks the missing edge exchange property"));
    }
    if !family.is_intersecting() {
        return Err(pre("family is not intersecting"));
    }
    if !family.is_base_face(sigma) {
        return Err(pre(format!("{sigma} is not a base face of the family")));
    }
    Ok(())
}

/// Trades the facets that meet a supporting pair only through the essential vertex `v`,
/// producing a family at least as large supported by a pair without `v`.
///
/// `pair` must live on `lkcap(a, b)` with `u1` on the side of `a`. The exchange happens on the
/// side with more such facets (the smaller vertex on ties), and each new facet uses the least
/// admissible exchange vertex. All postconditions are checked before returning.
pub fn vertex_flip<'c, 'h, B: Block>(
    family: &FacetFamily<'c, B>,
    sigma: &Face<B>,
    a: usize,
    b: usize,
    pair: &DualPair<'h, B>,
    v: usize,
) -> Result<Flip<'c, 'h, B>> {
    check_common(family, sigma, a, b)?;
    let host = family.host();
    if !supports_at(pair, family, a, b)? {
        return Err(pre("the dual pair does not support the family"));
    }
    let essential = pair.essential_vertices();
    if !essential.contains(v) {
        return Err(pre(format!("{v} is not an essential vertex of the pair")));
    }
    if sigma.contains(v) {
        return Err(pre(format!("{v} lies in the base face {sigma}")));
    }
    let adj = host.adjacency();
    if let Some(c) = sigma.iter().find(|&c| c != a && c != b && adj[c].contains(v)) {
        return Err(pre(format!("{c}{v} is an edge")));
    }

    let (ua, ub) = (pair.u1(), pair.u2());
    let ra = r_set(family, a, b, ub, v);
    let rb = r_set(family, b, a, ua, v);
    let a_side = ra.len() > rb.len() || (ra.len() == rb.len() && a < b);
    // x gains facets, the other side loses them
    let (x, rx, ry, ux, uy) = if a_side {
        (a, ra, rb, ua, ub)
    } else {
        (b, rb, ra, ub, ua)
    };

    let mut added = Vec::with_capacity(rx.len());
    for f in &rx {
        let g = exchange(host, &adj, f, v)
            .ok_or_else(|| EkrError::Internal(format!("no exchange for {v} in {f}")))?;
        added.push(g);
    }
    let kept = family.faces().filter(|f| !ry.contains(f));
    let new_family = FacetFamily::from_faces(host, kept.chain(added.iter().copied()))?;

    // W = U_y ∖ Q_y(v), where Q_y(v) holds the members meeting some element of U_x only in v.
    let single = Face::singleton(v);
    let w: Vec<Face<B>> = uy
        .members()
        .into_iter()
        .filter(|l| !ux.minimal_elements().iter().any(|m| m.intersection(l) == single))
        .collect();
    let w = UpperSet::generated_by(pair.host(), minimal_faces(w))?;
    let inner = dual_pair_of(&w);
    // inner = (W**, W*); the y side takes W**
    let new_pair = if a_side { inner.swapped() } else { inner };

    if new_family.len() < family.len() {
        return Err(EkrError::Internal("vertex flip shrank the family".into()));
    }
    if !new_family.is_intersecting() {
        return Err(EkrError::Internal("vertex flip broke the intersecting property".into()));
    }
    if !new_family.is_base_face(sigma) {
        return Err(EkrError::Internal("vertex flip lost the base face".into()));
    }
    let new_essential = new_pair.essential_vertices();
    if !new_essential.is_subset(&essential.without(v)) {
        return Err(EkrError::Internal("vertex flip did not shrink the essential vertices".into()));
    }
    if !supports_at(&new_pair, &new_family, a, b)? {
        return Err(EkrError::Internal("new dual pair does not support the new family".into()));
    }
    Ok(Flip {
        family: new_family,
        pair: new_pair,
        exchanged_side: x,
        removed: ry,
        added,
    })
}

/// Outcome of [`reduce_base_edge`].
#[derive(Clone, Debug)]
pub struct Reduction<'c, B: Block> {
    pub family: FacetFamily<'c, B>,
    /// `a` or `b`; every member of `family` contains it.
    pub base_vertex: usize,
    pub flips: usize,
}

/// Repeats [`vertex_flip`] on the least essential vertex, starting from the pair
/// `(R**, R*)` with `R` the restriction of the family at `a` away from `b`, until the pair has
/// no essential vertices. The result is at least as large and lies in the star of `a` or `b`.
pub fn reduce_base_edge<'c, B: Block>(family: &FacetFamily<'c, B>, a: usize, b: usize) -> Result<Reduction<'c, B>> {
    let sigma = Face::singleton(a).with(b);
    check_common(family, &sigma, a, b)?;
    let host = family.host();
    let lk = host.lkcap(a, b)?;
    let w = lk.vertex_set();
    let start = UpperSet::generated_by(&lk, restrict_to(family, a, b, &w))?;
    let mut pair = dual_pair_of(&start);
    let mut current = family.clone();
    let mut flips = 0;
    while let Some(v) = pair.essential_vertices().min_vertex() {
        let step = vertex_flip(&current, &sigma, a, b, &pair, v)?;
        current = step.family;
        pair = step.pair;
        flips += 1;
    }
    let base_vertex = if pair.u1().is_empty() { b } else { a };
    if !current.faces().all(|f| f.contains(base_vertex)) {
        return Err(EkrError::Internal(format!("reduced family is not in the star of {base_vertex}")));
    }
    Ok(Reduction {
        family: current,
        base_vertex,
        flips,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    type C = SimplicialComplex<u64>;
    type F = Face<u64>;

    #[test]
    fn star_is_unchanged() {
        let oct: C = crosspolytope_boundary(3).unwrap();
        let star = oct.star_facets(&F::singleton(0)).unwrap();
        let r = reduce_base_edge(&star, 0, 2).unwrap();
        assert_eq!(r.family, star);
        assert_eq!(r.base_vertex, 0);
    }

    #[test]
    fn octahedron_non_star_family() {
        // 024, 025, 034, 124: intersecting, not a star, base edge {0, 2}
        let oct: C = crosspolytope_boundary(3).unwrap();
        let fam = FacetFamily::from_faces(
            &oct,
            [F::of(&[0, 2, 4]), F::of(&[0, 2, 5]), F::of(&[0, 3, 4]), F::of(&[1, 2, 4])],
        )
        .unwrap();
        assert!(fam.is_intersecting());
        assert!(fam.common_vertices().is_empty());
        let r = reduce_base_edge(&fam, 0, 2).unwrap();
        assert_eq!(r.family.len(), 4);
        assert!(r.flips >= 1);
        assert!(r.family.faces().all(|f| f.contains(r.base_vertex)));
    }

    #[test]
    fn preconditions_are_named() {
        let simplex = C::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        let fam = FacetFamily::new(&simplex, [0]).unwrap();
        assert!(matches!(reduce_base_edge(&fam, 0, 1), Err(EkrError::Precondition(_))));
        let oct: C = crosspolytope_boundary(3).unwrap();
        let star = oct.star_facets(&F::singleton(0)).unwrap();
        assert!(matches!(reduce_base_edge(&star, 0, 1), Err(EkrError::NotAFace(_))));
    }
}
