//! Exact exponential-time solvers.
//!
//! All solvers work on vertex bitmasks and therefore accept ground sets of at
//! most [`MAX_VERTICES`] vertices. Every solver takes a [`Deadline`]; running
//! past it yields [`SolveError::Timeout`] and never a partial answer.

mod certificate;
mod chromatic;
mod colorable;
mod defect;
mod kneser;
mod matching;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::hypercore::{Hypergraph, HypergraphError};

pub use certificate::{
    validate_coloring, validate_defect_certificate, validate_kneser_coloring, CertificateError,
};
pub use chromatic::{chromatic_number, independence_number, ChromaticNumber, IndependentSet};
pub use colorable::is_r_colorable;
pub use defect::{colorability_defect, Defect, DefectCertificate};
pub use kneser::{kneser_chromatic_number, KneserChromatic, KneserColoring};
pub use matching::{matching_number, Matching};

pub(crate) use matching::{has_disjoint_family, max_disjoint_family};

/// Largest ground set the bitmask solvers handle.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("deadline exceeded")]
    Timeout,
    #[error("{n} vertices exceeds the solver limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("removal cap {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("input is not a graph (edge {0:?} does not have two vertices)")]
    NotAGraph(Vec<usize>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// Optional wall-clock limit for a solve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub const fn none() -> Self {
        Deadline(None)
    }

    pub fn after(limit: Duration) -> Self {
        Deadline(Instant::now().checked_add(limit))
    }

    pub fn at(instant: Instant) -> Self {
        Deadline(Some(instant))
    }

    pub fn expired(&self) -> bool {
        self.0.is_some_and(|t| Instant::now() >= t)
    }
}

/// Cheap periodic deadline polling for search loops.
pub(crate) struct Ticker {
    deadline: Deadline,
    count: u32,
}

impl Ticker {
    pub(crate) fn new(deadline: Deadline) -> Self {
        Ticker { deadline, count: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolveError> {
        self.count = self.count.wrapping_add(1);
        if self.count & 0x3ff == 0 && self.deadline.expired() {
            return Err(SolveError::Timeout);
        }
        Ok(())
    }

    pub(crate) fn check_now(&self) -> Result<(), SolveError> {
        if self.deadline.expired() {
            Err(SolveError::Timeout)
        } else {
            Ok(())
        }
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Indices of set bits, increasing.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub(crate) fn check_size(n: usize) -> Result<(), SolveError> {
    if n > MAX_VERTICES {
        Err(SolveError::TooLarge {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Edge masks with bit `v - 1` for vertex `v`.
pub(crate) fn edge_masks(h: &Hypergraph) -> Result<Vec<u64>, SolveError> {
    check_size(h.n())?;
    Ok(h.edges().iter().map(|e| vertex_mask(e)).collect())
}

pub(crate) fn vertex_mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bit(v - 1))
}

pub(crate) fn mask_vertices(mask: u64) -> Vec<usize> {
    bits(mask).map(|i| i + 1).collect()
}
