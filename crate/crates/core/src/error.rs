use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("part count must be at least 1, got {0}")]
    InvalidParts(usize),

    #[error("blow-up clique parameter p must be at least 2, got {0}")]
    InvalidP(usize),

    #[error("input of size {size} exceeds the limit of {limit} for {what}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("graph is not bipartite (odd cycle through vertex {0})")]
    NotBipartite(usize),

    #[error("graph is not a forest")]
    NotForest,

    #[error("graph is not a tree")]
    NotTree,

    #[error("argument out of domain: {0}")]
    OutOfDomain(String),

    #[error("outside the scope of the available theorems: {0}")]
    OutOfTheoremScope(String),

    #[error("search exceeded its node budget of {0}")]
    BudgetExceeded(u64),

    #[error("forbidden family is empty")]
    EmptyFamily,
}

pub type Result<T> = std::result::Result<T, Error>;
