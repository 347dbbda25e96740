//! Ground types: hypergraphs, stability predicates, derived hypergraphs and
//! serialization.

mod coloring;
mod derived;
mod hypergraph;
pub mod io;
mod report;
mod stability;

use thiserror::Error;

pub use coloring::Coloring;
pub use derived::{
    augment_with_fns, induced_subhypergraph, kneser_hypergraph, Induced, DEFAULT_KNESER_CAP,
};
pub(crate) use derived::disjoint;
pub use hypergraph::{Edge, Hypergraph, Vertex};
pub use report::{Certificate, Report, ReportBuilder, Verdict};
pub use stability::{is_stable_pair, is_stable_set, stable_subhypergraph, StabilityKind};
pub(crate) use stability::{non_stable_pairs, stable_set_unchecked};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("edge {index}: vertex {vertex} outside [1, {n}]")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("edge {index}: vertex {vertex} repeated")]
    RepeatedVertex { index: usize, vertex: usize },
    #[error("edge {index} is not strictly increasing")]
    NotIncreasing { index: usize },
    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },
    #[error("pair uses the same vertex {0} twice")]
    SameVertex(usize),
    #[error("ground sets differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },
    #[error("input has an {s}-stable edge {edge:?}")]
    StableEdge { edge: Edge, s: usize },
    #[error("input has a singleton edge {0:?}")]
    SingletonEdge(Edge),
    #[error("Kneser arity must be at least 2, got {0}")]
    KneserArity(usize),
    #[error("{edges} edges is too large for explicit Kneser construction (cap {cap})")]
    TooLargeForKneser { edges: usize, cap: usize },
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("invalid coloring: {0}")]
    Coloring(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl HypergraphError {
    /// Index of the offending edge, for errors tied to one edge.
    pub fn edge_index(&self) -> Option<usize> {
        match *self {
            HypergraphError::EmptyEdge { index }
            | HypergraphError::VertexOutOfRange { index, .. }
            | HypergraphError::RepeatedVertex { index, .. }
            | HypergraphError::NotIncreasing { index }
            | HypergraphError::DuplicateEdge { index } => Some(index),
            _ => None,
        }
    }
}
