use serde::{Deserialize, Serialize};

use super::DualPair;
use crate::block::Block;
use crate::error::{EkrError, Result};
use crate::face::Face;

/// The isomorphism types of dual pairs in a flag complex of dimension at most one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DualPairType {
    /// `(∅, D)`
    Trivial,
    /// `(<v>, <v>)`
    Vertex,
    /// `(<u,v>, <uv>)`
    VertexPlusEdge,
    /// `(<uv,wx>, <vw,ux>)` on an induced 4-cycle `u v w x`
    FourCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: DualPairType,
    /// `[]`, `[v]`, `[u, v]` or the cycle `[u, v, w, x]` in order.
    pub witness: Vec<usize>,
    /// True when the pattern sits on the `u2` side, i.e. the pair is listed swapped.
    pub swapped: bool,
}

fn sizes<B: Block>(faces: &[Face<B>]) -> Vec<usize> {
    faces.iter().map(Face::len).collect()
}

fn match_oriented<B: Block>(one: &[Face<B>], two: &[Face<B>]) -> Option<(DualPairType, Vec<usize>)> {
    match (sizes(one).as_slice(), sizes(two).as_slice()) {
        ([], [0]) => Some((DualPairType::Trivial, Vec::new())),
        ([1], [1]) if one == two => Some((DualPairType::Vertex, one[0].to_vec())),
        ([1, 1], [2]) if one[0].union(&one[1]) == two[0] => {
            Some((DualPairType::VertexPlusEdge, two[0].to_vec()))
        }
        ([2, 2], [2, 2]) => {
            let (uv, wx) = (one[0], one[1]);
            if !uv.is_disjoint(&wx) {
                return None;
            }
            let (u, v) = (uv.min_vertex()?, uv.max_vertex()?);
            // vw and ux must be the two sets on the other side
            let w = two.iter().find(|e| e.contains(v))?.difference(&Face::singleton(v)).min_vertex()?;
            let x = wx.without(w).min_vertex()?;
            let mut expect = [Face::of(&[v, w]), Face::of(&[u, x])];
            expect.sort();
            (wx.contains(w) && expect == two).then(|| (DualPairType::FourCycle, vec![u, v, w, x]))
        }
        _ => None,
    }
}

/// Names the type of a dual pair whose host is a flag complex of dimension at most one.
pub fn classify_1d<B: Block>(pair: &DualPair<'_, B>) -> Result<Classification> {
    let host = pair.host();
    if host.dim() > 1 {
        return Err(EkrError::Precondition(format!(
            "classification needs a host of dimension at most 1, got {}",
            host.dim()
        )));
    }
    if !host.is_flag() {
        return Err(EkrError::NotFlag);
    }
    let (one, two) = (pair.u1().minimal_elements(), pair.u2().minimal_elements());
    if let Some((kind, witness)) = match_oriented(one, two) {
        return Ok(Classification { kind, witness, swapped: false });
    }
    if let Some((kind, witness)) = match_oriented(two, one) {
        return Ok(Classification { kind, witness, swapped: true });
    }
    Err(EkrError::Internal(format!(
        "dual pair {one:?} / {two:?} in a flag 1-complex matches no known type"
    )))
}
