use thiserror::Error;

/// Errors produced by the graph, homology and Betti engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not bipartite with the given bipartition")]
    NotBipartite,
    #[error(
        "graph is not connected (bipartition may not be unique); pass the override to proceed"
    )]
    NotConnected,
    #[error("vertex subset is not contained in the graph's vertex set")]
    SubsetOutOfRange,
    #[error("subset is empty")]
    EmptySubset,
    #[error("independence complex on {{{subset}}} has more than {cap} faces")]
    FaceLimitExceeded { subset: String, cap: usize },
    #[error("graph has {n} vertices which exceeds the engine cap {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("edge ideal is empty: the graph has no edges")]
    EmptyIdeal,
    #[error("theorem hypothesis not satisfied: {0}")]
    PreconditionViolated(String),
    #[error("field characteristic {0} is not a prime below 2^16")]
    BadCharacteristic(u32),
    #[error("vertex index {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loops are not allowed in a simple graph")]
    LoopEdge,
    #[error("ideal is not minimally generated: {0}")]
    NotMinimal(String),
    #[error("quadratic ideal has no square generator; use the plain graph engine")]
    NoSquares,
}

pub type Result<T> = std::result::Result<T, Error>;
