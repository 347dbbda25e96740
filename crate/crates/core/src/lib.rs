//! Exact computation of Kneser hypergraph chromatic numbers, colorability
//! defects and the stable-set families built around them.
//!
//! Everything works on vertex sets `[n] = {1, …, n}`. Solvers are exact
//! (bitmask search, `n <= 64`) and every positive answer comes with a
//! certificate that [`solvers::validate_defect_certificate`] and friends
//! re-check independently.

pub mod constructions;
pub mod hypercore;
pub mod par;
pub mod solvers;
pub mod verify;

pub use hypercore::{Hypergraph, HypergraphError, Report, Verdict};
pub use solvers::{Deadline, SolveError};
