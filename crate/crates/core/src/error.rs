use thiserror::Error;

/// Rejected graph construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Failure of a library operation whose hypotheses are not met.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has no edges, so it is not clique regular for any omega")]
    NoEdges,
    #[error("clique order must be at least {min}, got {omega}")]
    InvalidOmega { omega: usize, min: usize },
    #[error("graph is not {omega}-clique regular")]
    NotCliqueRegular { omega: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not a regular clique assembly")]
    NotRca,
    #[error("graph is not connected")]
    Disconnected,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parameters violate (n-k-1)mu = k(k-lambda-1): {0:?}")]
    ParameterEquation((i64, i64, i64, i64)),
    #[error("boring strongly regular parameters {0:?}")]
    Boring((i64, i64, i64, i64)),
    #[error("divisibility precondition failed: {0}")]
    Divisibility(String),
    #[error("inconsistent spectrum: {0}")]
    InconsistentSpectrum(String),
    #[error("size guard exceeded: {0}")]
    TooLarge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
