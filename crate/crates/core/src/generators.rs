//! Constructors for the complexes used in experiments. Vertex ids are assigned
//! deterministically; each function documents its labeling.

use itertools::Itertools;

use crate::block::Block;
use crate::complex::SimplicialComplex;
use crate::error::{EkrError, Result};
use crate::face::Face;

fn bad(msg: impl Into<String>) -> EkrError {
    EkrError::InvalidParameters(msg.into())
}

fn face<B: Block>(vs: impl IntoIterator<Item = usize>) -> Result<Face<B>> {
    Face::new(vs)
}

/// All `r`-subsets of `0..n`.
pub fn complete_complex<B: Block>(n: usize, r: usize) -> Result<SimplicialComplex<B>> {
    if r == 0 || r > n {
        return Err(bad(format!("complete complex needs 1 <= r <= n, got n={n}, r={r}")));
    }
    let facets = (0..n)
        .combinations(r)
        .map(face)
        .collect::<Result<Vec<Face<B>>>>()?;
    SimplicialComplex::from_facets(n, facets)
}

/// The boundary of the `d`-dimensional cross-polytope. Antipodal pairs are `(2i, 2i+1)`.
pub fn crosspolytope_boundary<B: Block>(d: usize) -> Result<SimplicialComplex<B>> {
    if d == 0 {
        return Err(bad("cross-polytope dimension must be at least 1"));
    }
    multipartite(&vec![2; d])
}

/// The `n`-gon boundary on vertices `0..n` with edges `{i, i+1 mod n}`.
pub fn cycle<B: Block>(n: usize) -> Result<SimplicialComplex<B>> {
    if n < 3 {
        return Err(bad(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let facets = (0..n)
        .map(|i| face([i, (i + 1) % n]))
        .collect::<Result<Vec<Face<B>>>>()?;
    SimplicialComplex::from_facets(n, facets)
}

/// Clique complex of the complete multipartite graph. Parts get consecutive ids, so
/// `[2, 3]` has parts `{0,1}` and `{2,3,4}`.
pub fn kpartite_clique_complex<B: Block>(part_sizes: &[usize]) -> Result<SimplicialComplex<B>> {
    if part_sizes.len() < 2 {
        return Err(bad("a multipartite clique complex needs at least two parts"));
    }
    multipartite(part_sizes)
}

fn multipartite<B: Block>(part_sizes: &[usize]) -> Result<SimplicialComplex<B>> {
    if part_sizes.contains(&0) {
        return Err(bad("parts must be nonempty"));
    }
    let mut start = 0;
    let parts: Vec<std::ops::Range<usize>> = part_sizes
        .iter()
        .map(|&s| {
            start += s;
            start - s..start
        })
        .collect();
    let facets = parts
        .into_iter()
        .multi_cartesian_product()
        .map(face)
        .collect::<Result<Vec<Face<B>>>>()?;
    SimplicialComplex::from_facets(start, facets)
}

/// A `d`-simplex on `0..=d` with one more `d`-simplex glued to each of its ridges. The
/// simplex glued on the ridge that omits `i` has apex `d + 1 + i`.
pub fn simplex_with_neighbors<B: Block>(d: usize) -> Result<SimplicialComplex<B>> {
    if d < 2 {
        return Err(bad("simplex_with_neighbors needs d >= 2"));
    }
    let central: Face<B> = face(0..=d)?;
    let mut facets = vec![central];
    for i in 0..=d {
        facets.push(central.without(i).with(d + 1 + i));
    }
    SimplicialComplex::from_facets(2 * d + 2, facets)
}

/// Two `d`-simplices `σ ∪ {p}` and `σ ∪ {q}` on the common ridge `σ = {0..d-1}`, with
/// `p = d` and `q = d + 1`, and a path of `k` further simplices around every `(d-2)`-face
/// `τ_i = σ ∖ {i}`: `τ_i ∪ {y, x_1}`, `τ_i ∪ {x_1, x_2}`, ..., `τ_i ∪ {x_{k-1}, x_k}` where
/// `y` is `q` for even `i` and `p` for odd `i`. Fresh apexes are numbered from `d + 2` in order.
pub fn fattened_bipyramid<B: Block>(d: usize, k: usize) -> Result<SimplicialComplex<B>> {
    if d < 3 || k == 0 {
        return Err(bad("fattened_bipyramid needs d >= 3 and k >= 1"));
    }
    let sigma: Face<B> = face(0..d)?;
    let (p, q) = (d, d + 1);
    let mut facets = vec![sigma.with(p), sigma.with(q)];
    let mut next = d + 2;
    for i in 0..d {
        let tau = sigma.without(i);
        let mut prev = if i % 2 == 0 { q } else { p };
        for _ in 0..k {
            if next >= B::BITS as usize {
                return Err(EkrError::WidthExceeded {
                    needed: next + 1,
                    width: B::BITS,
                });
            }
            facets.push(tau.with(prev).with(next));
            prev = next;
            next += 1;
        }
    }
    let c = SimplicialComplex::from_facets(next, facets)?;
    debug_assert!(c.is_flag());
    Ok(c)
}

/// Join with two isolated vertices.
pub fn suspension<B: Block>(c: &SimplicialComplex<B>) -> Result<SimplicialComplex<B>> {
    let two_points = SimplicialComplex::from_facets(2, [Face::singleton(0), Face::singleton(1)])?;
    c.join(&two_points)
}

/// Join with the 4-cycle, i.e. two suspensions. The new vertices are `n, n+1` and `n+2, n+3`
/// (antipodal pairs), where `n = c.n_vertices()`.
pub fn double_suspension<B: Block>(c: &SimplicialComplex<B>) -> Result<SimplicialComplex<B>> {
    c.join(&crosspolytope_boundary(2)?)
}

/// The boundary of the icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron_boundary<B: Block>() -> Result<SimplicialComplex<B>> {
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut facets = Vec::with_capacity(20);
    for i in 0..5 {
        facets.push(face([0, up(i), up(i + 1)])?);
        facets.push(face([up(i), up(i + 1), lo(i)])?);
        facets.push(face([lo(i), lo(i + 1), up(i + 1)])?);
        facets.push(face([11, lo(i), lo(i + 1)])?);
    }
    SimplicialComplex::from_facets(12, facets)
}

/// Diagonals `(i, j)` with `i < j` of the `(mn+2)`-gon that can occur in an
/// `(m+2)`-angulation, i.e. `j - i ≡ 1 (mod m)`.
fn allowed_diagonal(i: usize, j: usize, polygon: usize, m: usize) -> bool {
    let gap = j - i;
    gap >= 2 && gap <= polygon - 2 && (gap - 1).is_multiple_of(m)
}

/// Every `(m+2)`-angulation of the polygon arc `i..=j` (closed by the edge `{i, j}`), as lists
/// of diagonals strictly inside the arc.
fn angulations(i: usize, j: usize, m: usize, out: &mut Vec<Vec<(usize, usize)>>) {
    if j - i == 1 {
        out.push(Vec::new());
        return;
    }
    // Choose the cell on the edge {i, j}: corners i = p_0 < p_1 < ... < p_{m+1} = j with every
    // gap ≡ 1 (mod m).
    fn corners(at: usize, left: usize, j: usize, m: usize, acc: &mut Vec<usize>, cells: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if at == j {
                cells.push(acc.clone());
            }
            return;
        }
        let mut step = 1;
        while at + step + (left - 1) <= j {
            acc.push(at + step);
            corners(at + step, left - 1, j, m, acc, cells);
            acc.pop();
            step += m;
        }
    }
    let mut cells = Vec::new();
    corners(i, m + 1, j, m, &mut vec![i], &mut cells);
    for cell in cells {
        let mut partial: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        for (&a, &b) in cell.iter().tuple_windows() {
            if b - a == 1 {
                continue;
            }
            let mut sub = Vec::new();
            angulations(a, b, m, &mut sub);
            partial = partial
                .iter()
                .flat_map(|p| {
                    sub.iter().map(move |s| {
                        let mut v = p.clone();
                        v.push((a, b));
                        v.extend_from_slice(s);
                        v
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
}

/// A diagonal `(i, j)` of the polygon, `i < j`.
pub type Diagonal = (usize, usize);

/// The complex of `(m+2)`-angulations of the convex `(mn+2)`-gon, together with the diagonal
/// `(i, j)` that each vertex stands for. Vertices are the diagonals used by some angulation,
/// numbered in lexicographic order; polygon corners are `0..mn+2`.
pub fn dissection_complex_with_diagonals<B: Block>(
    n: usize,
    m: usize,
) -> Result<(SimplicialComplex<B>, Vec<Diagonal>)> {
    if n < 2 || m < 1 {
        return Err(bad(format!("dissection complex needs n >= 2, m >= 1, got n={n}, m={m}")));
    }
    let polygon = m * n + 2;
    let mut all = Vec::new();
    angulations(0, polygon - 1, m, &mut all);
    let diagonals: Vec<(usize, usize)> = all.iter().flatten().copied().sorted().dedup().collect();
    debug_assert!(diagonals.iter().all(|&(i, j)| allowed_diagonal(i, j, polygon, m)));
    let facets = all
        .iter()
        .map(|ang| face(ang.iter().map(|d| diagonals.binary_search(d).expect("used diagonal"))))
        .collect::<Result<Vec<Face<B>>>>()?;
    let c = SimplicialComplex::from_facets(diagonals.len(), facets)?;
    debug_assert_eq!(c.num_facets(), all.len());
    debug_assert_eq!(c.pure_dim(), Some(n as isize - 2));
    debug_assert!(c.is_flag());
    debug_assert!(c.is_without_boundary().unwrap_or(false));
    Ok((c, diagonals))
}

/// See [`dissection_complex_with_diagonals`]. `m = 1` gives the simplicial associahedron.
pub fn dissection_complex<B: Block>(n: usize, m: usize) -> Result<SimplicialComplex<B>> {
    dissection_complex_with_diagonals(n, m).map(|(c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = SimplicialComplex<u64>;

    fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
        let inside = |x: usize| a.0 < x && x < a.1;
        inside(b.0) != inside(b.1) && a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
    }

    /// Brute force: all (n-1)-sets of pairwise noncrossing allowed diagonals.
    fn brute_dissections(n: usize, m: usize) -> usize {
        let polygon = m * n + 2;
        let diags: Vec<(usize, usize)> = (0..polygon)
            .tuple_combinations()
            .filter(|&(i, j)| allowed_diagonal(i, j, polygon, m))
            .collect();
        diags
            .iter()
            .combinations(n - 1)
            .filter(|set| set.iter().tuple_combinations().all(|(a, b)| !crosses(**a, **b)))
            .count()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn fuss_catalan(n: u64, m: u64) -> u64 {
        binom(n * (m + 1), n - 1) / n
    }

    #[test]
    fn dissection_counts() {
        for (n, m) in [(2, 1), (3, 1), (4, 1), (5, 1), (2, 2), (3, 2), (4, 2), (3, 3), (2, 4)] {
            let c: C = dissection_complex(n, m).unwrap();
            assert_eq!(c.num_facets() as u64, fuss_catalan(n as u64, m as u64), "n={n} m={m}");
            assert_eq!(c.num_facets(), brute_dissections(n, m), "n={n} m={m}");
            assert!(c.is_flag());
            assert_eq!(c.pure_dim(), Some(n as isize - 2));
            assert!(c.is_without_boundary().unwrap());
        }
        assert_eq!(fuss_catalan(4, 2), 55);
        let pentagon: C = dissection_complex(3, 1).unwrap();
        assert_eq!(pentagon.num_facets(), 5);
        assert_eq!(pentagon.vertices().len(), 5);
    }

    #[test]
    fn hexagon_ear_star() {
        let (c, diags) = dissection_complex_with_diagonals::<u64>(4, 1).unwrap();
        assert_eq!(c.num_facets(), 14);
        let ear = diags.binary_search(&(0, 2)).unwrap();
        assert_eq!(c.star_size(&Face::singleton(ear)), 5);
    }

    #[test]
    fn crosspolytope_is_kpartite() {
        for d in 1..6 {
            let x: C = crosspolytope_boundary(d).unwrap();
            assert_eq!(x.num_facets(), 1 << d);
            assert_eq!(x.n_vertices(), 2 * d);
            assert_eq!(x.star_size(&Face::singleton(0)), 1 << (d - 1));
        }
        // antipodes 0,1 and 2,3 against the cycle order 0,2,1,3
        let swap = |v: usize| Some([0, 2, 1, 3][v]);
        assert_eq!(crosspolytope_boundary::<u64>(2).unwrap(), cycle(4).unwrap().relabel(4, swap).unwrap());
        let k = kpartite_clique_complex::<u64>(&[3, 3, 3, 3]).unwrap();
        assert_eq!(k.num_facets(), 81);
        assert!((0..12).all(|v| k.star_size(&Face::singleton(v)) == 27));
        assert_eq!(kpartite_clique_complex::<u64>(&[2, 3]).unwrap().num_facets(), 6);
    }

    #[test]
    fn small_generators() {
        let k = complete_complex::<u64>(4, 2).unwrap();
        assert_eq!(k.num_facets(), 6);
        assert_eq!(complete_complex::<u64>(3, 3).unwrap().num_facets(), 1);
        assert!(complete_complex::<u64>(3, 4).is_err());
        let swn = simplex_with_neighbors::<u64>(2).unwrap();
        assert_eq!(swn.num_facets(), 4);
        assert!(swn.is_flag());
        let ico = icosahedron_boundary::<u64>().unwrap();
        assert_eq!(ico.num_facets(), 20);
        assert!(ico.is_flag());
        assert!(ico.is_pseudo_manifold().unwrap());
        assert!((0..12).all(|v| ico.star_size(&Face::singleton(v)) == 5));
        let ds = double_suspension(&crosspolytope_boundary::<u64>(2).unwrap()).unwrap();
        assert_eq!(ds, crosspolytope_boundary(4).unwrap());
    }

    #[test]
    fn fattened_bipyramid_shape() {
        for d in 3..6 {
            for k in 1..4 {
                let c: C = fattened_bipyramid(d, k).unwrap();
                assert_eq!(c.num_facets(), 2 + d * k);
                assert!(c.is_flag());
                assert_eq!(c.pure_dim(), Some(d as isize));
                assert!(!c.is_without_boundary().unwrap());
            }
        }
    }
}
