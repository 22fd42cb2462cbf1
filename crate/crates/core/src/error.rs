use thiserror::Error;

/// Errors produced by graph construction, codecs and the verification
/// harnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop ({v},{v}) is not allowed")]
    SelfLoop { v: usize },

    #[error("({u},{v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("graph on {n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("unknown graph name `{0}`")]
    UnknownName(String),

    #[error("invalid part sizes: every part of a complete multipartite graph must be >= 1")]
    EmptyPart,

    #[error("vertex {v} has degree {d}, expected 3")]
    NotDegreeThree { v: usize, d: usize },

    #[error("vertices {0}, {1}, {2} do not induce a triangle")]
    NotATriangle(usize, usize, usize),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(&'static str),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid enumeration window: need 0 <= min <= max <= n(n-1)/2, got [{min}, {max}] at n={n}")]
    InvalidEdgeWindow { min: usize, max: usize, n: usize },

    #[error("invalid subtree token `{0}`")]
    InvalidToken(String),

    #[error("unknown bound name `{0}`")]
    UnknownBound(String),

    #[error("missing parameter `{0}` for this bound")]
    MissingParameter(&'static str),

    #[error("parameters exceed the supported range: {0}")]
    CapExceeded(String),

    #[error("spot check disagreement on {graph6}: {detail}")]
    SpotCheckMismatch { graph6: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
