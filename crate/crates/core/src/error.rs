use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid order {n}: {reason}")]
    InvalidOrder { n: usize, reason: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph has no edges")]
    EmptyEdgeSet,

    #[error("graph has isolated vertices under a degree-dependent scheme (vertex {0})")]
    IsolatedVertex(usize),

    #[error("degree override has length {got}, expected {expected}")]
    OverrideLength { got: usize, expected: usize },

    #[error("degree override for vertex {0} must be at least 1")]
    OverrideZero(usize),

    #[error("unknown named graph `{0}`")]
    UnknownNamedGraph(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("no sign change of the polynomial in [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("report: {0}")]
    Report(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
