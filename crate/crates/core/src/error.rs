use thiserror::Error;

use crate::label::VertexLabel;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexLabel),
    #[error("edge endpoint {0} is not a vertex")]
    UnknownEndpoint(VertexLabel),
    #[error("self-loop at {0}")]
    SelfLoop(VertexLabel),
    #[error("malformed vertex label {0}")]
    InvalidLabel(VertexLabel),
    #[error("orientation rule gives no direction for edge {0}-{1}")]
    IncompleteRule(VertexLabel, VertexLabel),
    #[error("{0}->{1} is not an edge of the base graph")]
    ForeignEdge(VertexLabel, VertexLabel),
    #[error("edge {0}-{1} is oriented both ways")]
    ConflictingArcs(VertexLabel, VertexLabel),
    #[error("coloring covers {got} vertices, graph has {expected}")]
    PartialColoring { expected: usize, got: usize },
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("map covers {got} vertices, source has {expected}")]
    PartialMap { expected: usize, got: usize },
    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExceeded {
        nodes: u64,
        /// Best known (lower, upper) bounds when the search was optimizing a value.
        bounds: Option<(usize, usize)>,
    },
    #[error("search cancelled after {nodes} nodes")]
    Cancelled { nodes: u64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("cycle is not a cycle of the oriented graph")]
    ForeignCycle,
    #[error("cycle search and witness search disagree: {0}")]
    InconsistentCertificates(String),
    #[error("coloring uses {0} colors, at most 3 allowed")]
    TooManyColors(usize),
    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("structure assumption failed: {0}")]
    StructureMismatch(String),
    #[error("directed local value is {0}, expected at most 2")]
    ValueNotTwo(usize),
    #[error("construction check `{0}` failed")]
    CheckFailed(String),
    #[error("malformed document: {0}")]
    Format(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
