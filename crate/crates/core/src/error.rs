use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("a module must be nonempty")]
    EmptyModule,

    #[error("block {0} of the partition is not a module")]
    NotAModule(usize),

    #[error("blocks do not partition the vertex set: {0}")]
    NotAPartition(String),

    #[error("operation needs at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid vertex map: {0}")]
    InvalidVertexMap(String),

    #[error("set {0} is not a maximal independent set of its part")]
    NotMaximalIndependent(String),

    #[error("maximal independent set enumeration exceeded the cap of {cap} sets")]
    CapExceeded { cap: usize },

    #[error("strategy `{strategy}` does not apply: {reason}")]
    StrategyInapplicable {
        strategy: &'static str,
        reason: String,
    },
}
