use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (bound {bound})")]
    VertexOutOfRange { vertex: usize, bound: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),
    #[error("witness host has {witness} vertices, graph has |A| = {graph}")]
    WitnessSizeMismatch { witness: usize, graph: usize },
    #[error("invalid support witness: {0}")]
    InvalidWitness(String),
    #[error("vertex set is not connected in the host")]
    NotConnectedInHost,
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("decomposition does not match the graph: {0}")]
    DecompositionMismatch(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("instance has {size} vertices, oracle guard is {guard}")]
    GuardExceeded { size: usize, guard: usize },
    #[error("malformed thin representation: {0}")]
    MalformedRepresentation(String),
    #[error("representation is not consistent with the graph")]
    InconsistentRepresentation,
    #[error("invalid path decomposition: {0}")]
    InvalidPathDecomposition(String),
    #[error("infeasible generator parameters: {0}")]
    InfeasibleParameters(String),
}
