//! Conjecture checkers, theorem replays and parameter scans. Every check
//! computes exact values on both sides of the inequality, so `Holds` is a
//! verification and not a failure to find a counterexample.

mod checks;
mod sample;
mod scan;
mod theorems;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::ConstructionError;
use crate::hypercore::{HypergraphError, DEFAULT_KNESER_CAP};
use crate::solvers::{Deadline, SolveError};

pub use checks::{check_almost, check_conjecture, check_frick, check_jafari};
pub use sample::{sample_hypergraph, SamplerConfig};
pub use scan::{scan, ScanMode, ScanOutput, ScanSpec, ScanSummary};
pub use theorems::{verify_theorem, TheoremParams, THEOREM_IDS};

pub const EXTRA_HYPOTHESIS: &str = "extra-hypothesis";

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),
    #[error("outside the theorem hypothesis: {0}")]
    Hypothesis(String),
    #[error("invalid scan: {0}")]
    InvalidScan(String),
    #[error("oracle disagreement: {0}")]
    OracleMismatch(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Solve(SolveError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

impl From<SolveError> for VerifyError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Hypergraph(h) => VerifyError::Hypergraph(h),
            other => VerifyError::Solve(other),
        }
    }
}

/// Per-check solver limits.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub deadline: Deadline,
    pub max_removal: Option<usize>,
    /// Largest edge count for which the explicit Kneser hypergraph is built.
    pub kneser_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            deadline: Deadline::none(),
            max_removal: None,
            kneser_cap: DEFAULT_KNESER_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjecture {
    Frick,
    Jafari,
    Almost,
}

impl Conjecture {
    pub fn name(self) -> &'static str {
        match self {
            Conjecture::Frick => "frick",
            Conjecture::Jafari => "jafari",
            Conjecture::Almost => "almost",
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Conjecture {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "frick" => Ok(Conjecture::Frick),
            "jafari" => Ok(Conjecture::Jafari),
            "almost" => Ok(Conjecture::Almost),
            other => Err(format!("unknown conjecture `{other}` (expected frick, jafari or almost)")),
        }
    }
}

/// A conjecture instantiated at arity `r` and stability gap `s`. Frick's
/// conjecture ties the two: `s = r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConjectureId {
    pub conjecture: Conjecture,
    pub r: usize,
    pub s: usize,
}

impl ConjectureId {
    pub fn frick(r: usize) -> Self {
        ConjectureId {
            conjecture: Conjecture::Frick,
            r,
            s: r,
        }
    }

    pub fn jafari(r: usize, s: usize) -> Self {
        ConjectureId {
            conjecture: Conjecture::Jafari,
            r,
            s,
        }
    }

    pub fn almost(r: usize, s: usize) -> Self {
        ConjectureId {
            conjecture: Conjecture::Almost,
            r,
            s,
        }
    }

    /// Whether `(r, s)` and `n` lie inside the conjecture's stated range.
    pub fn within_hypothesis(&self, n: usize) -> bool {
        let (r, s) = (self.r, self.s);
        match self.conjecture {
            Conjecture::Frick => r >= 3 && n >= 3,
            Conjecture::Jafari => s >= r && r >= 2 && n >= 2,
            Conjecture::Almost => r >= s && s >= 2 && n >= 2,
        }
    }
}

pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}
