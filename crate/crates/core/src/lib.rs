//! Exact solution spaces of minimum vertex cover on bipartite and
//! bipartite-core graphs.
//!
//! The pipeline: [`matching`] finds a maximum matching, [`rsg`] turns it into
//! a reduced solution graph (backbones, unfrozen nodes, double edges),
//! [`counting`] extracts unfrozen cores and counts covers exactly, and
//! [`meanfield`] gives the ensemble theory the experiments in [`experiments`]
//! are compared against. [`ke`] grows König–Egerváry subgraphs of general
//! graphs.

pub mod counting;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod ke;
pub mod matching;
pub mod meanfield;
pub mod oracle;
pub mod rsg;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::{BipartitePartition, EnsembleParams, Graph, PeelResult, Side};
pub use matching::Matching;
pub use rsg::{Assignment, EdgeKind, NodeState, ReducedSolutionGraph};
pub use scalar::Scalar;

/// Mean-field fixed point in double precision.
pub type MeanField = meanfield::MeanFieldSolution<f64>;
/// Mean-field fixed point in single precision.
pub type MeanField32 = meanfield::MeanFieldSolution<f32>;
/// Node-state fractions in double precision.
pub type StateRatios = rsg::StateRatios<f64>;
