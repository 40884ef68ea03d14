//! The interchange format `{"n_vertices": N, "facets": [[v, ...], ...]}`.

use serde::{Deserialize, Serialize};

use crate::block::Block;
use crate::complex::SimplicialComplex;
use crate::error::{EkrError, Result};
use crate::face::Face;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub n_vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl<B: Block> From<&SimplicialComplex<B>> for ComplexJson {
    fn from(c: &SimplicialComplex<B>) -> Self {
        ComplexJson {
            n_vertices: c.n_vertices(),
            facets: c.facets().iter().map(Face::to_vec).collect(),
        }
    }
}

impl ComplexJson {
    /// Builds the canonical complex; unsorted input and non-maximal faces are accepted.
    pub fn to_complex<B: Block>(&self) -> Result<SimplicialComplex<B>> {
        SimplicialComplex::from_vertex_lists(self.n_vertices, &self.facets)
    }

    /// Largest vertex id plus one, or `n_vertices` if larger: the face width needed.
    pub fn width_needed(&self) -> usize {
        self.facets
            .iter()
            .flatten()
            .map(|&v| v + 1)
            .max()
            .unwrap_or(0)
            .max(self.n_vertices)
    }
}

pub fn parse_complex<B: Block>(text: &str) -> Result<SimplicialComplex<B>> {
    let raw: ComplexJson =
        serde_json::from_str(text).map_err(|e| EkrError::InvalidParameters(format!("malformed complex JSON: {e}")))?;
    raw.to_complex()
}

/// Compact canonical JSON for a complex.
pub fn complex_to_string<B: Block>(c: &SimplicialComplex<B>) -> String {
    serde_json::to_string(&ComplexJson::from(c)).expect("complex JSON serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::crosspolytope_boundary;

    #[test]
    fn round_trip() {
        let oct = crosspolytope_boundary::<u64>(3).unwrap();
        let s = complex_to_string(&oct);
        assert!(s.starts_with(r#"{"n_vertices":6,"facets":[[0,2,4],[0,2,5],"#));
        assert_eq!(parse_complex::<u64>(&s).unwrap(), oct);
    }

    #[test]
    fn canonicalizes_and_rejects() {
        let c = parse_complex::<u64>(r#"{"n_vertices":3,"facets":[[2,1,0],[0,1]]}"#).unwrap();
        assert_eq!(c.num_facets(), 1);
        assert!(matches!(
            parse_complex::<u64>(r#"{"n_vertices":2,"facets":[[0,5]]}"#),
            Err(EkrError::VertexOutOfRange { vertex: 5, .. })
        ));
        assert!(parse_complex::<u64>(r#"{"facets":[]}"#).is_err());
        assert!(matches!(
            parse_complex::<u32>(r#"{"n_vertices":40,"facets":[[0,39]]}"#),
            Err(EkrError::WidthExceeded { .. })
        ));
    }
}
