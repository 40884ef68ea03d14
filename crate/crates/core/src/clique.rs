//! Exact clique searches over [`BitGraph`]s.
//!
//! Maximum cliques use branch and bound with a greedy sequential-coloring bound over bit-set
//! candidate sets (the BBMC scheme): candidates are colored in vertex order, branched on from the
//! highest color down, and a branch is cut once `|clique| + color` cannot beat the incumbent.
//! Vertices are pre-sorted by descending degree. The root level may be explored in parallel; the
//! shared incumbent only affects pruning, never the reported size.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::bitset::{BitGraph, BitSet};

/// Greedy coloring of `p` in index order. Returns vertices sorted by color together with
/// their colors (1-based, non-decreasing).
fn color_sort(g: &BitGraph, p: &BitSet, verts: &mut Vec<usize>, colors: &mut Vec<usize>) {
    verts.clear();
    colors.clear();
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            uncolored.remove(v);
            q.remove(v);
            q.difference_with(g.neighbors(v));
            verts.push(v);
            colors.push(color);
        }
    }
}

struct MaxSearch<'g> {
    g: &'g BitGraph,
    best: &'g AtomicUsize,
    witness: &'g Mutex<Option<Vec<usize>>>,
    stop_at: Option<usize>,
    done: &'g AtomicBool,
}

impl MaxSearch<'_> {
    fn record(&self, clique: &[usize]) {
        let mut w = self.witness.lock().expect("witness lock");
        let len = clique.len();
        if w.as_ref().is_none_or(|c| c.len() < len) {
            *w = Some(clique.to_vec());
            self.best.fetch_max(len, Ordering::SeqCst);
        }
        if self.stop_at.is_some_and(|k| len >= k) {
            self.done.store(true, Ordering::SeqCst);
        }
    }

    fn expand(&self, clique: &mut Vec<usize>, mut p: BitSet) {
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        color_sort(self.g, &p, &mut verts, &mut colors);
        for i in (0..verts.len()).rev() {
            if self.done.load(Ordering::Relaxed) {
                return;
            }
            if clique.len() + colors[i] <= self.best.load(Ordering::Relaxed) {
                return;
            }
            let v = verts[i];
            clique.push(v);
            let np = p.intersection(self.g.neighbors(v));
            if np.is_empty() {
                if clique.len() > self.best.load(Ordering::Relaxed) {
                    self.record(clique);
                }
            } else {
                self.expand(clique, np);
            }
            clique.pop();
            p.remove(v);
        }
    }
}

/// Outcome of a maximum-clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxClique {
    pub size: usize,
    /// A clique of that size, or `None` when nothing beat the supplied lower bound.
    pub clique: Option<Vec<usize>>,
}

/// Largest clique of `g` among `candidates`, looking only for cliques strictly larger than
/// `lower_bound`. With `stop_at = Some(k)` the search ends as soon as a clique of size `k` is seen.
pub fn max_clique_within(
    g: &BitGraph,
    candidates: &BitSet,
    lower_bound: usize,
    stop_at: Option<usize>,
    parallel: bool,
) -> MaxClique {
    let n = g.order();
    let mut order: Vec<usize> = candidates.iter().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(candidates.intersection_count(g.neighbors(v))), v));
    let mut full_order = order.clone();
    full_order.extend((0..n).filter(|v| !candidates.contains(*v)));
    let pg = g.permuted(&full_order);
    let p = BitSet::from_elems(n, 0..order.len());

    let best = AtomicUsize::new(lower_bound);
    let witness = Mutex::new(None);
    let done = AtomicBool::new(false);
    let search = MaxSearch {
        g: &pg,
        best: &best,
        witness: &witness,
        stop_at,
        done: &done,
    };

    let mut verts = Vec::new();
    let mut colors = Vec::new();
    color_sort(&pg, &p, &mut verts, &mut colors);
    // Root branch i explores cliques whose first vertex is verts[i] and whose remaining
    // vertices come from verts[..i].
    let branches: Vec<usize> = (0..verts.len()).rev().collect();
    let run = |i: usize| {
        if done.load(Ordering::Relaxed) || colors[i] <= best.load(Ordering::Relaxed) {
            return;
        }
        let v = verts[i];
        let mut np = BitSet::from_elems(n, verts[..i].iter().copied());
        np.intersect_with(pg.neighbors(v));
        let mut clique = vec![v];
        if np.is_empty() {
            if 1 > best.load(Ordering::Relaxed) {
                search.record(&clique);
            }
        } else {
            search.expand(&mut clique, np);
        }
    };
    if parallel {
        branches.into_par_iter().for_each(run);
    } else {
        branches.into_iter().for_each(run);
    }

    let clique = witness
        .into_inner()
        .expect("witness lock")
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|v| full_order[v]).collect();
            c.sort_unstable();
            c
        });
    MaxClique {
        size: best.load(Ordering::SeqCst),
        clique,
    }
}

/// Maximum clique of the whole graph; see [`max_clique_within`].
pub fn max_clique(g: &BitGraph, lower_bound: usize, parallel: bool) -> MaxClique {
    max_clique_within(g, &BitSet::full(g.order()), lower_bound, None, parallel)
}

/// Some clique of size at least `k` inside `candidates`, if one exists.
pub fn find_clique_of_size(g: &BitGraph, candidates: &BitSet, k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    max_clique_within(g, candidates, k - 1, Some(k), false).clique
}

/// The lexicographically least clique (as a sorted index list) among all cliques of size `k`.
///
/// Built greedily: at each position, the smallest vertex that still extends to a `k`-clique
/// using only larger vertices is fixed.
pub fn lex_least_clique(g: &BitGraph, k: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut chosen = Vec::with_capacity(k);
    let mut cand = BitSet::full(n);
    for pos in 0..k {
        let mut picked = None;
        for v in cand.iter() {
            let mut rest = cand.intersection(g.neighbors(v));
            rest.retain_above(v);
            if rest.count() + pos + 1 < k {
                continue;
            }
            if find_clique_of_size(g, &rest, k - pos - 1).is_some() {
                picked = Some((v, rest));
                break;
            }
        }
        let (v, rest) = picked?;
        chosen.push(v);
        cand = rest;
    }
    Some(chosen)
}

/// Visits every clique of size exactly `k` (each once, as a sorted index list), assuming no
/// clique is larger than `k`. The visitor may stop the walk early. Returns the number visited,
/// or `Err(visited)` once more than `cap` cliques would be visited.
pub fn for_each_clique_of_size(
    g: &BitGraph,
    k: usize,
    cap: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<usize, usize> {
    struct Walk<'a, F> {
        g: &'a BitGraph,
        k: usize,
        cap: usize,
        count: usize,
        visit: F,
        stopped: bool,
        capped: bool,
    }

    impl<F: FnMut(&[usize]) -> ControlFlow<()>> Walk<'_, F> {
        fn go(&mut self, clique: &mut Vec<usize>, mut p: BitSet) {
            if clique.len() == self.k {
                if self.count == self.cap {
                    self.capped = true;
                    return;
                }
                self.count += 1;
                let mut sorted = clique.clone();
                sorted.sort_unstable();
                if (self.visit)(&sorted).is_break() {
                    self.stopped = true;
                }
                return;
            }
            let mut verts = Vec::new();
            let mut colors = Vec::new();
            color_sort(self.g, &p, &mut verts, &mut colors);
            for i in (0..verts.len()).rev() {
                if self.stopped || self.capped || clique.len() + colors[i] < self.k {
                    return;
                }
                let v = verts[i];
                clique.push(v);
                let np = p.intersection(self.g.neighbors(v));
                self.go(clique, np);
                clique.pop();
                p.remove(v);
            }
        }
    }

    let mut walk = Walk {
        g,
        k,
        cap,
        count: 0,
        visit: &mut visit,
        stopped: false,
        capped: false,
    };
    walk.go(&mut Vec::new(), BitSet::full(g.order()));
    if walk.capped {
        Err(walk.count)
    } else {
        Ok(walk.count)
    }
}

/// Bron–Kerbosch enumeration of maximal cliques with Tomita pivoting.
pub fn for_each_maximal_clique(g: &BitGraph, mut visit: impl FnMut(&[usize]) -> ControlFlow<()>) {
    fn bk(
        g: &BitGraph,
        r: &mut Vec<usize>,
        mut p: BitSet,
        mut x: BitSet,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if p.is_empty() {
            if x.is_empty() {
                let mut sorted = r.clone();
                sorted.sort_unstable();
                return visit(&sorted);
            }
            return ControlFlow::Continue(());
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (p.intersection_count(g.neighbors(u)), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        let mut branch = p.clone();
        branch.difference_with(g.neighbors(pivot));
        for v in branch.iter() {
            r.push(v);
            bk(
                g,
                r,
                p.intersection(g.neighbors(v)),
                x.intersection(g.neighbors(v)),
                visit,
            )?;
            r.pop();
            p.remove(v);
            x.insert(v);
        }
        ControlFlow::Continue(())
    }

    let n = g.order();
    let _ = bk(g, &mut Vec::new(), BitSet::full(n), BitSet::new(n), &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_max_clique(g: &BitGraph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|m| {
                let vs: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn pseudo_random_graph(n: usize, seed: u64, density: u64) -> BitGraph {
        use rand::{Rng, SeedableRng};
        let rng = std::cell::RefCell::new(rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        BitGraph::from_predicate(n, |_, _| rng.borrow_mut().random_range(0..100) < density)
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for seed in 0..40 {
            let g = pseudo_random_graph(12, seed, 30 + seed % 50);
            let expected = brute_max_clique(&g);
            for parallel in [false, true] {
                let got = max_clique(&g, 0, parallel);
                assert_eq!(got.size, expected);
                let c = got.clique.unwrap();
                assert_eq!(c.len(), expected);
                assert!(g.is_clique(&c));
            }
        }
    }

    #[test]
    fn lower_bound_suppresses_witness() {
        let g = BitGraph::from_predicate(4, |_, _| true);
        let r = max_clique(&g, 4, false);
        assert_eq!(r, MaxClique { size: 4, clique: None });
        assert_eq!(max_clique(&g, 3, false).clique, Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn lex_least_matches_enumeration() {
        for seed in 0..30 {
            let g = pseudo_random_graph(11, seed, 55);
            let k = brute_max_clique(&g);
            let mut all = Vec::new();
            for_each_clique_of_size(&g, k, usize::MAX, |c| {
                all.push(c.to_vec());
                ControlFlow::Continue(())
            })
            .unwrap();
            all.sort();
            let before = all.len();
            all.dedup();
            assert_eq!(before, all.len(), "cliques must be visited once");
            assert_eq!(lex_least_clique(&g, k), all.first().cloned());
        }
    }

    #[test]
    fn cocktail_party_counts() {
        // K_8 minus a perfect matching: maximum cliques pick one of each pair.
        let g = BitGraph::from_predicate(8, |i, j| i / 2 != j / 2);
        let count = for_each_clique_of_size(&g, 4, usize::MAX, |_| ControlFlow::Continue(()));
        assert_eq!(count, Ok(16));
        assert_eq!(for_each_clique_of_size(&g, 4, 5, |_| ControlFlow::Continue(())), Err(5));
    }

    #[test]
    fn maximal_cliques_of_a_path() {
        let g = BitGraph::from_predicate(4, |i, j| j == i + 1);
        let mut found = Vec::new();
        for_each_maximal_clique(&g, |c| {
            found.push(c.to_vec());
            ControlFlow::Continue(())
        });
        found.sort();
        assert_eq!(found, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }
}
