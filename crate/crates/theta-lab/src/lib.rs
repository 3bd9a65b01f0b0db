//! theta-lab: executable structure theory for graphs without large theta
//! subgraphs.
//!
//! The crate provides certificate-producing search kernels over loopless
//! weighted multigraphs: exact theta detection, 2-/3-/4-sum and chain
//! decompositions, planarity with a prescribed facial cycle, circlet
//! dichotomies, class checkers and generators, and the three-edges-in-a-bond
//! decider. Every positive answer carries a witness that re-verifies by
//! independent code; every exhaustive kernel is budgeted and reports
//! exhaustion explicitly instead of guessing.
//!
//! Start with the runnable examples (`cargo run --example check_theta`) or
//! the `theta-lab` binary.

pub mod bonds;
pub mod budget;
pub mod bridge;
pub mod classes;
pub mod decompose;
pub mod eftheta;
pub mod extract;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod longest;
pub mod omega;
pub mod oracle;
pub mod paths;
pub mod planar;
pub mod sep;
pub mod suite;
pub mod theta;
pub mod unavoidable;

pub use budget::Budget;
pub use graph::{CycleWitness, Edge, EdgeId, Multigraph, PathWitness, Vertex};

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("no edge with id {0}")]
    NoSuchEdge(usize),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget of {limit} nodes exceeded; result unknown")]
    BudgetExceeded { limit: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for the explicit "unknown" outcome of a budgeted search.
    pub fn is_unknown(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
