use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::bitset::BitGraph;
use crate::block::Block;
use crate::clique::for_each_maximal_clique;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::face::Face;

/// A ridge and a facet vertex over it that admits no missing-edge exchange.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeepViolation<B: Block> {
    pub ridge: Face<B>,
    pub vertex: usize,
}

impl<B: Block> SimplicialComplex<B> {
    /// The 1-skeleton as a [`BitGraph`] on the used vertices, plus their ids.
    pub(crate) fn vertex_graph(&self) -> (BitGraph, Vec<usize>) {
        let verts = self.vertices();
        let mut pos = vec![usize::MAX; self.n_vertices()];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = self.adjacency();
        let mut g = BitGraph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for u in adj[v].iter() {
                g.add_edge(i, pos[u]);
            }
        }
        (g, verts)
    }

    /// A clique of the 1-skeleton that is not a face, if any.
    pub fn flag_violation(&self) -> Option<Face<B>> {
        let (g, verts) = self.vertex_graph();
        let mut bad = None;
        for_each_maximal_clique(&g, |clique| {
            let face = Face::of(&clique.iter().map(|&i| verts[i]).collect::<Vec<_>>());
            if self.contains(&face) {
                ControlFlow::Continue(())
            } else {
                bad = Some(face);
                ControlFlow::Break(())
            }
        });
        bad
    }

    /// Every set of pairwise adjacent vertices is a face.
    pub fn is_flag(&self) -> bool {
        self.flag_violation().is_none()
    }

    /// Number of facets through each ridge.
    fn ridge_degrees(&self) -> HashMap<Face<B>, usize> {
        let mut counts = HashMap::new();
        for f in self.facets() {
            for v in f.iter() {
                *counts.entry(f.without(v)).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Every ridge lies in at least two facets. Requires a pure complex.
    pub fn is_without_boundary(&self) -> Result<bool> {
        self.require_pure()?;
        Ok(self.ridge_degrees().values().all(|&c| c >= 2))
    }

    /// Every ridge lies in exactly two facets. Requires a pure complex.
    pub fn is_pseudo_manifold(&self) -> Result<bool> {
        self.require_pure()?;
        Ok(self.ridge_degrees().values().all(|&c| c == 2))
    }

    /// First (ridge, vertex) pair, in canonical facet order, where the missing edge exchange
    /// property fails. Requires a pure complex.
    pub fn missing_edge_exchange_violation(&self) -> Result<Option<MeepViolation<B>>> {
        self.require_pure()?;
        let mut opposite: HashMap<Face<B>, Vec<usize>> = HashMap::new();
        for f in self.facets() {
            for v in f.iter() {
                opposite.entry(f.without(v)).or_default().push(v);
            }
        }
        let adj = self.adjacency();
        for f in self.facets() {
            for v in f.iter() {
                let ridge = f.without(v);
                let ok = opposite[&ridge]
                    .iter()
                    .any(|&u| u != v && !adj[v].contains(u));
                if !ok {
                    return Ok(Some(MeepViolation { ridge, vertex: v }));
                }
            }
        }
        Ok(None)
    }

    pub fn has_missing_edge_exchange(&self) -> Result<bool> {
        Ok(self.missing_edge_exchange_violation()?.is_none())
    }
}
