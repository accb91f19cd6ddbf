use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {edge} has endpoint {vertex} outside 0..{vertex_count}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge index {0} out of range")]
    InvalidEdge(usize),
    #[error("vertex index {0} out of range")]
    InvalidVertex(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown class name '{0}'")]
    UnknownClass(String),
    #[error("graph has loops; this operation requires a loopless graph")]
    LoopsPresent,
    #[error("no fourientation of the requested type: divisor degree {degree} vs g-1 = {bound}")]
    Unrepresentable { degree: i64, bound: i64 },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid boundary walk: {0}")]
    InvalidWalk(String),
}

pub type Result<T> = std::result::Result<T, Error>;
