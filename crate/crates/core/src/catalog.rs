//! Named test complexes.

use crate::block::Block;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::generators::*;

#[derive(Clone, Debug)]
pub struct CatalogEntry<B: Block> {
    pub name: String,
    pub complex: SimplicialComplex<B>,
    /// Built as a suspension `{p, q} * L` (this includes double suspensions and cross-polytopes).
    pub suspension: bool,
}

fn entry<B: Block>(name: impl Into<String>, complex: SimplicialComplex<B>, suspension: bool) -> CatalogEntry<B> {
    CatalogEntry {
        name: name.into(),
        complex,
        suspension,
    }
}

fn cycles<B: Block>(out: &mut Vec<CatalogEntry<B>>, range: std::ops::RangeInclusive<usize>) -> Result<()> {
    for n in range {
        // the 4-cycle is the suspension of two points
        out.push(entry(format!("cycle({n})"), cycle(n)?, n == 4));
    }
    Ok(())
}

/// Flag, pure complexes without boundary of dimension at most 3.
pub fn flag_without_boundary<B: Block>() -> Result<Vec<CatalogEntry<B>>> {
    let mut out = Vec::new();
    for d in 1..=4 {
        out.push(entry(format!("crosspolytope({d})"), crosspolytope_boundary(d)?, d >= 2));
    }
    cycles(&mut out, 4..=10)?;
    out.push(entry("icosahedron", icosahedron_boundary()?, false));
    for (n, m) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2)] {
        out.push(entry(format!("dissection({n},{m})"), dissection_complex(n, m)?, false));
    }
    for parts in [
        &[2, 3][..],
        &[3, 3],
        &[2, 4],
        &[2, 2, 3],
        &[2, 3, 3],
        &[3, 3, 3],
        &[2, 3, 4],
        &[2, 2, 2, 3],
        &[2, 2, 3, 3],
        &[3, 3, 3, 3],
    ] {
        let name = format!("kpartite({parts:?})");
        let suspended = parts.contains(&2);
        out.push(entry(name, kpartite_clique_complex(parts)?, suspended));
    }
    let c4: SimplicialComplex<B> = cycle(4)?;
    let c5: SimplicialComplex<B> = cycle(5)?;
    let c6: SimplicialComplex<B> = cycle(6)?;
    let ico: SimplicialComplex<B> = icosahedron_boundary()?;
    let three_points = complete_complex(3, 1)?;
    out.push(entry("suspension(cycle(5))", suspension(&c5)?, true));
    out.push(entry("suspension(cycle(7))", suspension(&cycle(7)?)?, true));
    out.push(entry("suspension(icosahedron)", suspension(&ico)?, true));
    out.push(entry("suspension(dissection(4,1))", suspension(&dissection_complex(4, 1)?)?, true));
    out.push(entry("double_suspension(cycle(5))", double_suspension(&c5)?, true));
    out.push(entry("join(cycle(5),cycle(5))", c5.join(&c5)?, false));
    out.push(entry("join(cycle(4),cycle(6))", c4.join(&c6)?, true));
    out.push(entry("join(cycle(5),three points)", c5.join(&three_points)?, false));
    Ok(out)
}

/// Flag complexes that are closed manifolds by construction.
pub fn flag_manifolds<B: Block>() -> Result<Vec<CatalogEntry<B>>> {
    let mut out = Vec::new();
    for d in 2..=5 {
        out.push(entry(format!("crosspolytope({d})"), crosspolytope_boundary(d)?, true));
    }
    cycles(&mut out, 4..=10)?;
    let ico: SimplicialComplex<B> = icosahedron_boundary()?;
    out.push(entry("icosahedron", ico.clone(), false));
    for n in 3..=6 {
        out.push(entry(format!("associahedron({n})"), dissection_complex(n, 1)?, false));
    }
    let c5: SimplicialComplex<B> = cycle(5)?;
    let c6: SimplicialComplex<B> = cycle(6)?;
    let assoc = dissection_complex(4, 1)?;
    out.push(entry("suspension(cycle(5))", suspension(&c5)?, true));
    out.push(entry("suspension(cycle(6))", suspension(&c6)?, true));
    out.push(entry("suspension(icosahedron)", suspension(&ico)?, true));
    out.push(entry("double_suspension(cycle(5))", double_suspension(&c5)?, true));
    out.push(entry("double_suspension(icosahedron)", double_suspension(&ico)?, true));
    out.push(entry("double_suspension(associahedron(4))", double_suspension(&assoc)?, true));
    out.push(entry("join(cycle(5),cycle(5))", c5.join(&c5)?, false));
    out.push(entry("join(cycle(5),cycle(6))", c5.join(&c6)?, false));
    out.push(entry("join(cycle(5),icosahedron)", c5.join(&ico)?, false));
    Ok(out)
}

/// Small complexes of assorted shapes, including ones with boundary and non-flag ones.
pub fn small_complexes<B: Block>(max_facets: usize) -> Result<Vec<CatalogEntry<B>>> {
    let mut out: Vec<CatalogEntry<B>> = flag_without_boundary()?
        .into_iter()
        .filter(|e| e.complex.num_facets() <= max_facets)
        .collect();
    for (n, r) in [(4, 2), (5, 2), (5, 3), (6, 3), (4, 3)] {
        out.push(entry(format!("complete({n},{r})"), complete_complex(n, r)?, false));
    }
    for d in 2..=3 {
        out.push(entry(format!("simplex_with_neighbors({d})"), simplex_with_neighbors(d)?, false));
    }
    for (d, k) in [(3, 1), (3, 2), (4, 1)] {
        out.push(entry(format!("fattened_bipyramid({d},{k})"), fattened_bipyramid(d, k)?, false));
    }
    out.push(entry("cycle(3)", cycle(3)?, false));
    out.push(entry(
        "two triangles and a tail",
        SimplicialComplex::from_vertex_lists(6, &[vec![0, 1, 2], vec![1, 2, 3], vec![3, 4], vec![4, 5]])?,
        false,
    ));
    out.retain(|e| e.complex.num_facets() <= max_facets);
    Ok(out)
}

/// A vertex `w` such that the complex is `{v, w} * lk(v)`.
pub fn suspension_partner<B: Block>(c: &SimplicialComplex<B>, v: usize) -> Option<usize> {
    let fv = crate::face::Face::singleton(v);
    let lk = c.link(&fv).ok()?;
    let adj = c.adjacency();
    (0..c.n_vertices())
        .filter(|&w| w != v && !adj[v].contains(w))
        .find(|&w| {
            let fw = crate::face::Face::singleton(w);
            c.facets().iter().all(|f| f.contains(v) || f.contains(w))
                && c.link(&fw).is_ok_and(|l| l.facets() == lk.facets())
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shapes() {
        for e in flag_without_boundary::<u128>().unwrap() {
            let c = &e.complex;
            assert!(c.is_pure() && c.is_flag(), "{}", e.name);
            assert!(c.dim() <= 3, "{}", e.name);
            assert!(c.is_without_boundary().unwrap(), "{}", e.name);
        }
        for e in flag_manifolds::<u128>().unwrap() {
            assert!(e.complex.is_flag() && e.complex.is_pseudo_manifold().unwrap(), "{}", e.name);
        }
    }

    #[test]
    fn suspension_detection() {
        let c5: SimplicialComplex<u64> = cycle(5).unwrap();
        let s = suspension(&c5).unwrap();
        assert_eq!(suspension_partner(&s, 5), Some(6));
        assert_eq!(suspension_partner(&s, 0), None);
        assert_eq!(suspension_partner(&c5, 0), None);
        let c4: SimplicialComplex<u64> = cycle(4).unwrap();
        assert_eq!(suspension_partner(&c4, 0), Some(2));
    }
}
