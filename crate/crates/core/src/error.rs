use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid building string: {0}")]
    InvalidBuildingString(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("hypergraph is not uniform (operation requires a k-uniform hypergraph)")]
    NotUniform,

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// A size cap was hit. Callers may bypass soft caps with [`crate::Guard::Ignore`].
    #[error("{what}: size {actual} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("building string has no dominating vertex; the labeling algorithm needs at least one 1")]
    NoDominatingVertex,

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
