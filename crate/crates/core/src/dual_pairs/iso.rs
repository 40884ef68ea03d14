use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::DualPair;
use crate::block::Block;
use crate::error::{EkrError, Result};
use crate::face::Face;

/// Default bound on the relabelings tried per orientation.
pub const DEFAULT_PERMUTATION_CAP: usize = 1 << 22;

/// The minimal elements of both sides relabeled to `0..k`, minimized over the relabelings of
/// the essential vertices that respect a colour refinement, and over swapping the sides. Equal forms mean isomorphic pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub first: Vec<Vec<usize>>,
    pub second: Vec<Vec<usize>>,
}

fn relabel<B: Block>(sets: &[Face<B>], label: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = sets
        .iter()
        .map(|f| f.iter().map(|v| label[v]).sorted().collect())
        .collect();
    out.sort();
    out
}

fn oriented<B: Block>(one: &[Face<B>], two: &[Face<B>], cap: usize) -> Result<CanonicalForm> {
    let essential: Vec<usize> = one.iter().chain(two).fold(Face::<B>::empty(), |acc, f| acc.union(f)).to_vec();
    let width = essential.last().map_or(0, |v| v + 1);
    // colour refinement: a vertex's colour is refined by the colours it shares sets with
    let mut color = vec![0usize; width];
    let mut classes = 1;
    loop {
        let key = |v: usize| {
            let of = |sets: &[Face<B>]| -> Vec<Vec<usize>> {
                sets.iter()
                    .filter(|f| f.contains(v))
                    .map(|f| f.iter().map(|u| color[u]).sorted().collect())
                    .sorted()
                    .collect()
            };
            (color[v], of(one), of(two))
        };
        let keys: Vec<_> = essential.iter().map(|&v| key(v)).collect();
        let ranks: Vec<_> = keys.iter().sorted().dedup().collect();
        let next: Vec<usize> = keys.iter().map(|k| ranks.binary_search(&k).unwrap()).collect();
        let refined = ranks.len();
        for (&v, c) in essential.iter().zip(next) {
            color[v] = c;
        }
        if refined == classes {
            break;
        }
        classes = refined;
    }
    let cells: Vec<Vec<usize>> = essential
        .iter()
        .map(|&v| (color[v], v))
        .sorted()
        .chunk_by(|(c, _)| *c)
        .into_iter()
        .map(|(_, group)| group.map(|(_, v)| v).collect())
        .collect();
    let total = cells.iter().try_fold(1usize, |acc, c| {
        (1..=c.len()).try_fold(acc, |a, k| a.checked_mul(k))
    });
    match total {
        Some(n) if n <= cap => {}
        _ => {
            return Err(EkrError::CapExceeded {
                what: "relabelings",
                limit: cap,
                partial: total.unwrap_or(usize::MAX),
            })
        }
    }
    let mut label = vec![usize::MAX; width];
    let mut best: Option<CanonicalForm> = None;
    for choice in cells
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()))
        .multi_cartesian_product()
    {
        for (next, v) in choice.iter().flatten().enumerate() {
            label[*v] = next;
        }
        let form = CanonicalForm {
            first: relabel(one, &label),
            second: relabel(two, &label),
        };
        if best.as_ref().is_none_or(|b| form < *b) {
            best = Some(form);
        }
    }
    // no essential vertices
    Ok(best.unwrap_or_else(|| CanonicalForm {
        first: relabel(one, &label),
        second: relabel(two, &label),
    }))
}

/// Canonical form of a dual pair, independent of the host and of the order of the sides.
pub fn canonical_form<B: Block>(pair: &DualPair<'_, B>, cap: usize) -> Result<CanonicalForm> {
    let (one, two) = (pair.u1().minimal_elements(), pair.u2().minimal_elements());
    Ok(oriented(one, two, cap)?.min(oriented(two, one, cap)?))
}

/// Whether some bijection of essential vertices carries the minimal elements of one pair to
/// those of the other, possibly after swapping sides. Hosts may differ.
pub fn dual_pairs_isomorphic<B: Block>(p: &DualPair<'_, B>, q: &DualPair<'_, B>, cap: usize) -> Result<bool> {
    if p.essential_vertices().len() != q.essential_vertices().len() {
        return Ok(false);
    }
    Ok(canonical_form(p, cap)? == canonical_form(q, cap)?)
}

#[cfg(test)]
mod tests {
    use super::super::{dual_pair_of, UpperSet};
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::generators::{crosspolytope_boundary, cycle};

    type C = SimplicialComplex<u64>;
    type F = Face<u64>;

    fn pair<'h>(host: &'h C, gens: &[&[usize]]) -> DualPair<'h, u64> {
        dual_pair_of(&UpperSet::generated_by(host, gens.iter().map(|g| F::of(g))).unwrap())
    }

    #[test]
    fn swap_and_hosts() {
        let c6: C = cycle(6).unwrap();
        let oct: C = crosspolytope_boundary(3).unwrap();
        let p = pair(&c6, &[&[0], &[1]]);
        assert!(dual_pairs_isomorphic(&p, &p.swapped(), DEFAULT_PERMUTATION_CAP).unwrap());
        let q = pair(&oct, &[&[2, 4]]);
        assert!(dual_pairs_isomorphic(&p, &q, DEFAULT_PERMUTATION_CAP).unwrap());
        let v1 = pair(&c6, &[&[3]]);
        let v2 = pair(&oct, &[&[5]]);
        assert!(dual_pairs_isomorphic(&v1, &v2, DEFAULT_PERMUTATION_CAP).unwrap());
        let c4: C = cycle(4).unwrap();
        let square = pair(&c4, &[&[0, 1], &[2, 3]]);
        assert!(!dual_pairs_isomorphic(&v1, &square, DEFAULT_PERMUTATION_CAP).unwrap());
        assert_eq!(
            canonical_form(&square, DEFAULT_PERMUTATION_CAP).unwrap(),
            CanonicalForm {
                first: vec![vec![0, 1], vec![2, 3]],
                second: vec![vec![0, 2], vec![1, 3]],
            }
        );
    }

    #[test]
    fn relabeling_cap() {
        let c4: C = cycle(4).unwrap();
        let square = pair(&c4, &[&[0, 1], &[2, 3]]);
        assert!(matches!(canonical_form(&square, 5), Err(EkrError::CapExceeded { partial: 24, .. })));
    }
}
