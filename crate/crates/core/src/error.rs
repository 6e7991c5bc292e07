use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("at most 64 vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("at most 64 edges are supported, got {0}")]
    TooManyEdges(usize),
    #[error("partition blocks are not disjoint (vertex {0} repeated)")]
    OverlappingBlocks(usize),
    #[error("empty partition block")]
    EmptyBlock,
    #[error("invalid generator argument: {0}")]
    Generator(String),
    #[error("{0} is not an edge of the graph")]
    UnknownEdge(String),
    #[error("{0} is not a triangle of the graph")]
    UnknownTriangle(String),
    #[error("orientation has a directed cycle")]
    Cyclic,
    #[error("wrong kind of 2-face: expected a {expected}")]
    WrongFaceKind { expected: &'static str },
    #[error("length vector has {got} entries, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("length vector is not in the deformation cone: {0}")]
    NotDeformation(String),
    #[error("graph contains a K4")]
    NotK4Free,
    #[error("more than {cap} acyclic orientations")]
    OrientationCap { cap: usize },
    #[error("more than {cap} intermediate rays")]
    RayCap { cap: usize },
    #[error("cone dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("face lattice of {rays} rays exceeds the cap {cap}")]
    FVectorCap { rays: usize, cap: usize },
    #[error("integer overflow in ray arithmetic")]
    Overflow,
    #[error("cone is not pointed")]
    NotPointed,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the error is an effort-cap refusal rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::OrientationCap { .. }
                | Error::RayCap { .. }
                | Error::DimensionCap { .. }
                | Error::FVectorCap { .. }
                | Error::Overflow
        )
    }
}
