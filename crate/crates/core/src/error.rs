use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("edge id {0} is already in use")]
    DuplicateEdge(EdgeId),
    #[error("resource limit exceeded: more than {limit} {what}")]
    ResourceLimit { what: &'static str, limit: usize },
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("theta property violated by a theta on edges {edges:?}")]
    ThetaViolation { edges: Vec<EdgeId> },
    #[error("cannot contract unbalanced loop {0}")]
    UnbalancedLoopContraction(EdgeId),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("labelling host does not match the biased graph")]
    HostMismatch,
    #[error("not a spanning tree: {0}")]
    NotSpanningTree(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Rerouting(#[from] ReroutingError),
    #[error("no shelling order of the finite faces was found")]
    NoShelling,
    #[error("construction properties violated: {0}")]
    ConstructionProperties(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("invalid construction input: {0}")]
    InvalidConstructionInput(String),
    #[error("edge {0} is in both the deletion and contraction sets")]
    MinorOverlap(EdgeId),
    #[error("edge {0} is not in the ground set")]
    NotInGroundSet(EdgeId),
    #[error("circuit axioms violated: {0}")]
    CircuitAxiom(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

/// Ways a single balanced rerouting can fail to apply.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReroutingError {
    #[error("replaced subwalk does not occur at the stated position")]
    SubwalkNotPresent,
    #[error("replaced subwalk is not a path")]
    SubwalkNotAPath,
    #[error("replacement is not the complementary arc of the cycle")]
    ArcMismatch,
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
