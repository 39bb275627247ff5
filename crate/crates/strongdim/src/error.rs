use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("solver budget exhausted after {nodes} branch nodes (budget {budget})")]
    BudgetExceeded { nodes: u64, budget: u64 },

    #[error("strong metric dimension is undefined for the one-vertex graph")]
    TrivialGraph,

    #[error("oracle budget: graph has {n} vertices, enumeration budget is {budget}")]
    OracleBudget { n: usize, budget: usize },

    #[error("{formula}: precondition failed: {reason}")]
    Precondition {
        formula: &'static str,
        reason: String,
    },

    #[error("{formula}: branch values disagree: {details}")]
    BranchDisagreement {
        formula: &'static str,
        details: String,
    },

    #[error("{formula}: parity diagnostic: numerator {numerator} is not divisible by 2; \
             an input hypothesis is violated")]
    Parity {
        formula: &'static str,
        numerator: i64,
    },

    #[error("report integrity: {0}")]
    ReportIntegrity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
