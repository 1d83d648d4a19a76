use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph with {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is not a tree")]
    NotATree,
    #[error("input has {vertex_count} vertices, the limit is {limit}")]
    SizeLimit { vertex_count: usize, limit: usize },
    #[error("maximum degree {max_degree} exceeds the degree bound {bound}")]
    DegreeExceeded { max_degree: usize, bound: usize },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid tree-partition: {0}")]
    InvalidPartition(String),
    #[error("vertex {0} of the seed set is not covered by any bag")]
    UncoveredSeed(usize),
    #[error("invalid spine: {0}")]
    InvalidSpine(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed {kind} document: {message}")]
    Schema { kind: &'static str, message: String },
}
