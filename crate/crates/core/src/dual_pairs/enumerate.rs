use std::collections::{BTreeMap, HashSet};

use super::iso::{canonical_form, CanonicalForm, DEFAULT_PERMUTATION_CAP};
use super::{dual_pair_of, DualPair, UpperSet};
use crate::block::Block;
use crate::complex::SimplicialComplex;
use crate::error::{EkrError, Result};
use crate::face::Face;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCaps {
    /// Largest generator face, in vertices.
    pub max_generator_size: usize,
    /// Largest generating antichain.
    pub max_antichain: usize,
    /// Refuse hosts with more faces than this.
    pub max_faces: usize,
    pub permutation_cap: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            max_generator_size: 3,
            max_antichain: 4,
            max_faces: 512,
            permutation_cap: DEFAULT_PERMUTATION_CAP,
        }
    }
}

/// Minimal elements of both sides, before canonicalization.
type RawPair<B> = (Vec<Face<B>>, Vec<Face<B>>);

/// Isomorphism classes of dual pairs, one representative each, ordered by canonical form.
#[derive(Clone, Debug)]
pub struct DualPairClasses<'h, B: Block> {
    pub classes: Vec<(CanonicalForm, DualPair<'h, B>)>,
    /// No antichain was cut off by the caps, so every dual pair of the host is represented.
    pub complete: bool,
    /// Number of generating antichains visited.
    pub antichains: usize,
}

impl<B: Block> DualPairClasses<'_, B> {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.classes.binary_search_by(|(f, _)| f.cmp(form)).is_ok()
    }
}

/// Runs `(U**, U*)` over the upper sets generated by antichains of faces within the caps and
/// keeps one pair per isomorphism class (the first met, generators taken in canonical order).
pub fn enumerate_dual_pairs<'h, B: Block>(
    host: &'h SimplicialComplex<B>,
    caps: &EnumerationCaps,
) -> Result<DualPairClasses<'h, B>> {
    let faces = host.all_faces();
    if faces.len() > caps.max_faces {
        return Err(EkrError::CapExceeded {
            what: "host faces",
            limit: caps.max_faces,
            partial: faces.len(),
        });
    }
    let mut complete = faces.iter().all(|f| f.len() <= caps.max_generator_size);
    let gens: Vec<Face<B>> = faces
        .into_iter()
        .filter(|f| f.len() <= caps.max_generator_size)
        .collect();

    struct Walk<'a, 'h, B: Block> {
        host: &'h SimplicialComplex<B>,
        gens: &'a [Face<B>],
        caps: &'a EnumerationCaps,
        found: BTreeMap<CanonicalForm, DualPair<'h, B>>,
        seen: HashSet<RawPair<B>>,
        truncated: bool,
        visited: usize,
    }

    impl<B: Block> Walk<'_, '_, B> {
        fn visit(&mut self, chosen: &mut Vec<Face<B>>, from: usize) -> Result<()> {
            self.visited += 1;
            let u = UpperSet::generated_by(self.host, chosen.iter().copied())?;
            let pair = dual_pair_of(&u);
            let raw = (pair.u1().minimal_elements().to_vec(), pair.u2().minimal_elements().to_vec());
            if self.seen.insert(raw) {
                let form = canonical_form(&pair, self.caps.permutation_cap)?;
                self.found.entry(form).or_insert(pair);
            }
            for i in from..self.gens.len() {
                let g = self.gens[i];
                if chosen.iter().any(|c| c.is_subset(&g) || g.is_subset(c)) {
                    continue;
                }
                if chosen.len() == self.caps.max_antichain {
                    self.truncated = true;
                    return Ok(());
                }
                chosen.push(g);
                self.visit(chosen, i + 1)?;
                chosen.pop();
            }
            Ok(())
        }
    }

    let mut walk = Walk {
        host,
        gens: &gens,
        caps,
        found: BTreeMap::new(),
        seen: HashSet::new(),
        truncated: false,
        visited: 0,
    };
    walk.visit(&mut Vec::new(), 0)?;
    complete &= !walk.truncated;
    Ok(DualPairClasses {
        classes: walk.found.into_iter().collect(),
        complete,
        antichains: walk.visited,
    })
}

/// Outcome of comparing a complex's dual-pair classes with those of a cross-polytope boundary.
#[derive(Clone, Debug)]
pub struct ConjectureCheck<'h, B: Block> {
    /// Every class found is realized in the cross-polytope boundary.
    pub holds: bool,
    pub violating: Option<DualPair<'h, B>>,
    /// Both enumerations were complete.
    pub complete: bool,
    pub classes: usize,
    pub crosspolytope_classes: usize,
}

/// Tests whether each dual pair class of `d` (flag, pure of dimension `k`, without boundary)
/// occurs in the boundary of the `(k+1)`-dimensional cross-polytope.
pub fn check_crosspolytope_conjecture<'h, B: Block>(
    d: &'h SimplicialComplex<B>,
    caps: &EnumerationCaps,
) -> Result<ConjectureCheck<'h, B>> {
    let dim = d.require_pure()?;
    if !d.is_flag() {
        return Err(EkrError::NotFlag);
    }
    if !d.is_without_boundary()? {
        return Err(EkrError::Precondition("complex has boundary".into()));
    }
    let cross: SimplicialComplex<B> = crate::generators::crosspolytope_boundary(dim as usize + 1)?;
    let reference = enumerate_dual_pairs(&cross, caps)?;
    let mine = enumerate_dual_pairs(d, caps)?;
    let violating = mine
        .classes
        .iter()
        .find(|(form, _)| !reference.contains(form))
        .map(|(_, p)| p.clone());
    Ok(ConjectureCheck {
        holds: violating.is_none(),
        violating,
        complete: mine.complete && reference.complete,
        classes: mine.len(),
        crosspolytope_classes: reference.len(),
    })
}
