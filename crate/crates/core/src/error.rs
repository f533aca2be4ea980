use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parameter undefined: {0}")]
    ParameterUndefined(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("contract-invalid-family: {0}")]
    InvalidFamily(String),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("input is not a forest: {0}")]
    NotAForest(String),

    /// No acyclic orientation with in-degree at most `k` exists. `core` is a
    /// subgraph in which every vertex has degree greater than `k`.
    #[error("no acyclic orientation with in-degree <= {k}: {} vertices of degree > {k} remain", core.len())]
    Infeasible { k: u64, core: Vec<usize> },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("ramsey table has no entry for {0}")]
    TableMiss(String),

    #[error("table parse error at line {line}: {message}")]
    TableParse { line: usize, message: String },

    #[error("table contradiction at line {line}: {message}")]
    TableContradiction { line: usize, message: String },

    #[error("inconsistent bounds: {0}")]
    Inconsistent(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A self-certification check failed. Always a bug in this crate.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
