use thiserror::Error;

/// Errors raised by complex construction, structural operators and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EkrError {
    #[error("vertex {vertex} is out of range for a complex on {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("{needed} vertices exceed the face width of {width} bits")]
    WidthExceeded { needed: usize, width: u32 },

    #[error("duplicate vertex {0} in face")]
    DuplicateVertex(usize),

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("operation requires a pure complex")]
    NotPure,

    #[error("operation requires a flag complex")]
    NotFlag,

    #[error("dimension {requested} is out of range (complex has dimension {dim})")]
    DimensionOutOfRange { requested: isize, dim: isize },

    #[error("intersection threshold t={t} is out of range 1..={max}")]
    ThresholdOutOfRange { t: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("empty family")]
    EmptyFamily,

    #[error("facet index {index} out of range for a complex with {len} facets")]
    FacetIndexOutOfRange { index: usize, len: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("host complex mismatch")]
    HostMismatch,

    #[error("resource cap exceeded: {what} (limit {limit}, partial count {partial})")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        partial: usize,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = EkrError> = std::result::Result<T, E>;
