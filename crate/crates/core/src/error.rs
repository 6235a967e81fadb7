use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not real-rooted")]
    NotRealRooted,

    #[error("root extraction failed: {0}")]
    RootExtraction(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("root index k={k} out of range for degree {degree}")]
    RootIndex { k: usize, degree: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("matrix {index} is not positive semidefinite (smallest eigenvalue {min_eig:e})")]
    NotPsd { index: usize, min_eig: f64 },

    #[error("matrix is not positive definite at the query point")]
    NotPositiveDefinite,

    #[error("invalid distribution: {0}")]
    Distribution(String),

    #[error("enumeration needs {needed} evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("vector system is not isotropic (deviation {0:e})")]
    NotIsotropic(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("barrier evaluated at {point} which is not strictly {side} the roots (edge {edge})")]
    BarrierDomain {
        point: f64,
        edge: f64,
        side: &'static str,
    },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge weight must be positive, got {0}")]
    BadWeight(f64),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not connected")]
    Disconnected,

    #[error("signing covers {found} edges, graph has {expected}")]
    IncompleteSigning { expected: usize, found: usize },

    #[error("Laplacian null spaces differ")]
    NullSpaceMismatch,

    #[error("graph has {n} vertices, cap is {cap}")]
    VertexCap { n: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
