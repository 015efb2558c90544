use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge index {edge} out of range ({m} edges)")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("coloring has {uncolored} uncolored edge(s)")]
    PartialColoring { uncolored: usize },
    #[error("coloring covers {got} edges, graph has {expected}")]
    ColoringLength { expected: usize, got: usize },
    #[error("edge {0} is already colored")]
    EdgeAlreadyColored(EdgeId),
    #[error("input coloring is not a star edge-coloring")]
    NotStar,
    #[error("input graph is not a complete graph")]
    NotComplete,
    #[error("expected a palette of exactly 4 colors 0..=3, found {0}")]
    PaletteNotFour(String),
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: Vertex, degree: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has a bridge {0}-{1}")]
    Bridge(Vertex, Vertex),
    #[error("inconsistent local color pattern at vertex {0}")]
    InconsistentPattern(Vertex),
    #[error("invalid cover map: {0}")]
    InvalidCover(String),
    #[error("search budget exhausted")]
    Exhausted,
}
