use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval {index} has lo {lo} > hi {hi}")]
    InvertedInterval { index: usize, lo: i64, hi: i64 },

    #[error("empty interval realization")]
    EmptyRealization,

    #[error("graph has {n} vertices, limit is {limit}")]
    TooManyVertices { n: usize, limit: usize },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency rows are not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),

    #[error("expected {expected} items, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("n = {n} outside enumeration range 1..={cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("invalid white family: {0}")]
    InvalidFamily(String),

    #[error("vertex {0} is not white")]
    NotWhite(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable short tag used in machine-readable diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvertedInterval { .. } | Error::EmptyRealization => "bad-realization",
            Error::TooManyVertices { .. } => "too-many-vertices",
            Error::VertexOutOfRange { .. } | Error::SelfLoop(_) | Error::Asymmetric(..) => {
                "bad-graph"
            }
            Error::SizeMismatch { .. } => "size-mismatch",
            Error::Graph6(_) => "malformed-graph6",
            Error::EnumerationCap { .. } => "enumeration-cap",
            Error::InvalidMatching(_) => "bad-matching",
            Error::Infeasible(_) => "infeasible",
            Error::InvalidFamily(_) => "bad-family",
            Error::NotWhite(_) => "not-white",
            Error::InvalidArgument(_) => "invalid-argument",
        }
    }
}
