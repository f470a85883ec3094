use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("edge probability p = {p} exceeds 1 (mean degree too large for the given sizes)")]
    ProbabilityTooLarge { p: f64 },

    #[error("invalid bipartition: {0}")]
    InvalidPartition(String),

    #[error("not a bipartite core graph: leaf-removal core contains an odd cycle of length {cycle_len}")]
    NotBipartiteCore { cycle_len: usize },

    #[error("propagation conflict at node {node}: forced both covered and uncovered")]
    PropagationConflict { node: usize },

    #[error("inconsistent reduced solution graph: {0}")]
    InvalidRsg(String),

    #[error("both hypotheses contradictory at node {node}: structure is not Konig-consistent")]
    BothHypothesesFail { node: usize },

    #[error("enumeration exceeded limit of {limit}")]
    LimitExceeded { limit: usize },

    #[error("count intractable: component with {variables} variables exceeded the branch budget")]
    CountIntractable { variables: usize },

    #[error("cycle simplification failed: {0}")]
    Simplification(String),

    #[error("fixed point did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("edge ({0}, {1}) is not pending")]
    NotPending(usize, usize),

    #[error("instance with seed {seed} failed: {source}")]
    Instance { seed: u64, source: Box<Error> },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
