use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a split graph")]
    NotSplit,
    #[error("invalid split partition: {0}")]
    InvalidPartition(String),
    #[error("invalid sparse split graph: {0}")]
    InvalidSparse(String),
    #[error("ordering is not a permutation of the expected side: {0}")]
    OrderingMismatch(String),
    #[error("instance too large for exhaustive search: {what} = {size} exceeds {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("graph is not a threshold graph")]
    NotThreshold,
    #[error("graph is not a comparability graph")]
    NotComparability,
    #[error("stable vertex {0} is not a prefix plus suffix under the ordering")]
    CertificateViolation(usize),
    #[error("clique vertex {u} is not a maximum neighbour of {v}")]
    NotMaxNeighbour { v: usize, u: usize },
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("A and B do not partition the stable set: {0}")]
    BadPartition(String),
    #[error("invalid set system: {0}")]
    InvalidSetSystem(String),
    #[error("range tree dimension must be at least one")]
    DimensionZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty box: lower bound {lo} exceeds upper bound {hi} in dimension {dim}")]
    EmptyBox { dim: usize, lo: i64, hi: i64 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
