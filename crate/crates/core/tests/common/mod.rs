//! Brute-force oracles shared by the integration and acceptance tests. They work on plain
//! vertex lists and bit masks so they do not lean on the library code they check.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::ops::ControlFlow;

use ekr_core::catalog::{self, CatalogEntry};
use ekr_core::clique::for_each_clique_of_size;
use ekr_core::dual_pairs::{dual_pair_of, reduce_base_edge, UpperSet};
use ekr_core::ekr::intersection_graph;
use ekr_core::{Complex128, Face128, FacetFamily};
use rand::seq::IndexedRandom;
use rand::Rng;

pub type Mask = u128;

pub fn facet_masks(c: &Complex128) -> Vec<Mask> {
    c.facets()
        .iter()
        .map(|f| f.to_vec().iter().fold(0, |m, &v| m | 1 << v))
        .collect()
}

pub fn mask_of(f: &Face128) -> Mask {
    f.iter().fold(0, |m, v| m | 1 << v)
}

/// Every face, by expanding each facet into its subsets.
pub fn all_faces(c: &Complex128) -> BTreeSet<Mask> {
    let mut out = BTreeSet::new();
    for f in facet_masks(c) {
        let mut sub = f;
        loop {
            out.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    out
}

pub fn minimal(sets: impl IntoIterator<Item = Mask>) -> BTreeSet<Mask> {
    let all: Vec<Mask> = sets.into_iter().collect();
    all.iter()
        .copied()
        .filter(|&s| !all.iter().any(|&o| o != s && o & s == o))
        .collect()
}

/// Faces of `faces` meeting every generator.
pub fn brute_dual(faces: &BTreeSet<Mask>, gens: &BTreeSet<Mask>) -> BTreeSet<Mask> {
    faces
        .iter()
        .copied()
        .filter(|&f| gens.iter().all(|&g| f & g != 0))
        .collect()
}

pub fn up(faces: &BTreeSet<Mask>, gens: &BTreeSet<Mask>) -> BTreeSet<Mask> {
    faces
        .iter()
        .copied()
        .filter(|&f| gens.iter().any(|&g| g & f == g))
        .collect()
}

/// Size of the largest t-intersecting family, by scanning every subset of facets.
pub fn naive_max_family(c: &Complex128, t: usize) -> (usize, usize) {
    let fs = facet_masks(c);
    let m = fs.len();
    assert!(m <= 22, "naive oracle is exponential");
    let ok: Vec<u32> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| (fs[i] & fs[j]).count_ones() as usize >= t)
                .fold(0u32, |acc, j| acc | 1 << j)
        })
        .collect();
    let (mut best, mut count) = (0, 0);
    for s in 1u32..(1u32 << m) {
        let mut rest = s;
        let mut good = true;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            if s & !ok[i] != 0 {
                good = false;
                break;
            }
            rest &= rest - 1;
        }
        if good {
            let k = s.count_ones() as usize;
            if k > best {
                best = k;
                count = 1;
            } else if k == best {
                count += 1;
            }
        }
    }
    (best, count)
}

/// Largest number of facets containing a common set of `t` vertices.
pub fn naive_max_star(c: &Complex128, t: usize) -> usize {
    let mut counts: HashMap<Mask, usize> = HashMap::new();
    for f in facet_masks(c) {
        let verts: Vec<usize> = (0..128).filter(|&v| f >> v & 1 == 1).collect();
        for combo in itertools::Itertools::combinations(verts.iter(), t) {
            let key = combo.iter().fold(0, |m, &&v| m | 1 << v);
            *counts.entry(key).or_default() += 1;
        }
    }
    counts.values().copied().max().unwrap_or(0)
}

/// Whether the facets at `members` share at least `t` vertices.
pub fn is_star(c: &Complex128, members: &[usize], t: usize) -> bool {
    let fs = facet_masks(c);
    let common = members.iter().fold(Mask::MAX, |acc, &i| acc & fs[i]);
    common.count_ones() as usize >= t
}

/// Hosts for the upper-set laws: small catalog complexes on at most 12 vertices.
pub fn small_hosts() -> Vec<CatalogEntry<u128>> {
    catalog::small_complexes::<u128>(64)
        .unwrap()
        .into_iter()
        .filter(|e| e.complex.n_vertices() <= 12)
        .collect()
}

pub fn random_generators<R: Rng>(faces: &[Face128], rng: &mut R) -> Vec<Face128> {
    let k = rng.random_range(0..=4);
    (0..k).map(|_| *faces.choose(rng).unwrap()).collect()
}

/// Counts violations of the dual laws over `samples` random upper sets spread over `hosts`.
pub fn upper_set_law_violations<R: Rng>(hosts: &[CatalogEntry<u128>], samples: usize, rng: &mut R) -> Vec<String> {
    let mut bad = Vec::new();
    let per_host = samples.div_ceil(hosts.len());
    for e in hosts {
        let host = &e.complex;
        let face_masks = all_faces(host);
        let faces: Vec<Face128> = host.all_faces();
        let mut pairs: BTreeSet<(BTreeSet<Mask>, BTreeSet<Mask>)> = BTreeSet::new();
        for _ in 0..per_host {
            let gens = random_generators(&faces, rng);
            let u = UpperSet::generated_by(host, gens.iter().copied()).unwrap();
            let gen_masks: BTreeSet<Mask> = gens.iter().map(mask_of).collect();
            let u_members = up(&face_masks, &gen_masks);
            let dual = u.intersecting_dual();
            let d_min: BTreeSet<Mask> = dual.minimal_elements().iter().map(mask_of).collect();
            let oracle = brute_dual(&face_masks, &gen_masks);
            if d_min != minimal(oracle.iter().copied()) {
                bad.push(format!("{}: dual of {gens:?} disagrees with the oracle", e.name));
                continue;
            }
            // (1) upward closed and maximal
            if up(&face_masks, &d_min) != oracle {
                bad.push(format!("{}: dual of {gens:?} is not an upper set", e.name));
            }
            if oracle.iter().any(|&f| u_members.iter().any(|&g| f & g == 0)) {
                bad.push(format!("{}: dual of {gens:?} does not cross-intersect", e.name));
            }
            // (2)
            let dd = dual.intersecting_dual();
            let dd_members = up(&face_masks, &dd.minimal_elements().iter().map(mask_of).collect());
            if !u_members.is_subset(&dd_members) {
                bad.push(format!("{}: <U> not inside U** for {gens:?}", e.name));
            }
            if dd.intersecting_dual().minimal_elements() != dual.minimal_elements() {
                bad.push(format!("{}: U*** != U* for {gens:?}", e.name));
            }
            // (3)
            if !dual.essential_vertices().is_subset(&u.essential_vertices()) {
                bad.push(format!("{}: E(U*) not inside E(U) for {gens:?}", e.name));
            }
            let p = dual_pair_of(&u);
            let one = up(&face_masks, &p.u1().minimal_elements().iter().map(mask_of).collect());
            let two = up(&face_masks, &p.u2().minimal_elements().iter().map(mask_of).collect());
            if brute_dual(&face_masks, &minimal(one.iter().copied())) != two {
                bad.push(format!("{}: dual_pair_of({gens:?}) is not a dual pair", e.name));
            }
            pairs.insert((one, two));
        }
        // (4)
        for (a1, a2) in &pairs {
            for (b1, b2) in &pairs {
                if (a1, a2) != (b1, b2) && a1.is_subset(b1) && a2.is_subset(b2) {
                    bad.push(format!("{}: one dual pair strictly contains another", e.name));
                }
            }
        }
    }
    bad
}

/// Greedy random maximal intersecting families.
pub fn random_intersecting_families<R: Rng>(c: &Complex128, count: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let fs = facet_masks(c);
    (0..count)
        .map(|_| {
            let mut order: Vec<usize> = (0..fs.len()).collect();
            rand::seq::SliceRandom::shuffle(order.as_mut_slice(), rng);
            let mut chosen: Vec<usize> = Vec::new();
            for i in order {
                if chosen.iter().all(|&j| fs[i] & fs[j] != 0) {
                    chosen.push(i);
                }
            }
            chosen.sort();
            chosen
        })
        .collect()
}

/// Runs the base-edge reduction on every edge that is a base face of each family, returning
/// the number of runs and the failures.
pub fn reduction_violations(c: &Complex128, families: &[Vec<usize>]) -> (usize, Vec<String>) {
    let fs = facet_masks(c);
    let adj = c.adjacency();
    let mut runs = 0;
    let mut bad = Vec::new();
    for members in families {
        let fam = FacetFamily::new(c, members.iter().copied()).unwrap();
        for (a, nb) in adj.iter().enumerate() {
            for b in nb.iter().filter(|&b| b > a) {
                let edge: Mask = 1 << a | 1 << b;
                if !members.iter().all(|&i| fs[i] & edge != 0) {
                    continue;
                }
                runs += 1;
                match reduce_base_edge(&fam, a, b) {
                    Ok(r) => {
                        let fm = facet_masks(c);
                        let in_star = r.family.members().iter().all(|&i| fm[i] >> r.base_vertex & 1 == 1);
                        let intersecting = r
                            .family
                            .members()
                            .iter()
                            .all(|&i| r.family.members().iter().all(|&j| fm[i] & fm[j] != 0));
                        if r.family.len() < fam.len() || !in_star || !intersecting {
                            bad.push(format!("{members:?} at {a}{b}: bad result {:?}", r.family.members()));
                        }
                    }
                    Err(e) => bad.push(format!("{members:?} at {a}{b}: {e}")),
                }
            }
        }
    }
    (runs, bad)
}

/// Maximum intersecting families of `c`, up to `cap` of them.
pub fn maximum_families(c: &Complex128, size: usize, cap: usize) -> Vec<Vec<usize>> {
    let g = intersection_graph(c, 1);
    let mut out = Vec::new();
    let _ = for_each_clique_of_size(&g, size, cap, |k| {
        out.push(k.to_vec());
        if out.len() >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

/// Hosts for the reduction checks: catalog complexes with the exchange property and their
/// lower skeleta.
pub fn reduction_hosts(max_facets: usize) -> Vec<(String, Complex128)> {
    let mut out = Vec::new();
    for e in catalog::flag_without_boundary::<u128>().unwrap() {
        if e.complex.num_facets() > max_facets {
            continue;
        }
        for k in 1..=e.complex.dim() {
            let s = e.complex.skeleton(k).unwrap();
            if s.has_missing_edge_exchange().unwrap() {
                let name = if k == e.complex.dim() {
                    e.name.clone()
                } else {
                    format!("{}-skeleton of {}", k, e.name)
                };
                out.push((name, s));
            }
        }
    }
    out
}
