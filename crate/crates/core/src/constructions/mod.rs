//! Generators for the explicit families and the constructive witnesses
//! (colorings, defect certificates, coloring extensions) behind the upper
//! bounds.

mod extend;
mod families;
mod fns;

use thiserror::Error;

use crate::hypercore::HypergraphError;
use crate::solvers::{CertificateError, SolveError};

pub use extend::extend_coloring_to_almost_stable;
pub use families::{
    complete_uniform, directrs_graph, directrs_range, freers1_graph, frick_gap_clique, frick_gap_graph,
    jafari_counterexample, jafari_within_hypothesis, Family,
};
pub use fns::{block_coloring, f_n_s, fns_chromatic_formula, fns_independence_formula, residue_defect_witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("base coloring is invalid: {0}")]
    InvalidBase(CertificateError),
    #[error(transparent)]
    Certificate(CertificateError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}
