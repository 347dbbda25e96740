use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Edge, Hypergraph, HypergraphError, Vertex};

/// Which notion of stability to filter edges by.
///
/// `Stable(s)`: every pair `x, y` satisfies `s <= |x - y| <= n - s`, i.e. the
/// cyclic distance on the `n`-cycle is at least `s`.
/// `AlmostStable(s)`: every pair satisfies `|x - y| >= s`; the wrap-around
/// constraint is dropped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "s", rename_all = "kebab-case")]
pub enum StabilityKind {
    Stable(usize),
    AlmostStable(usize),
}

impl StabilityKind {
    pub fn gap(self) -> usize {
        match self {
            StabilityKind::Stable(s) | StabilityKind::AlmostStable(s) => s,
        }
    }
}

impl fmt::Display for StabilityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityKind::Stable(s) => write!(f, "{s}-stable"),
            StabilityKind::AlmostStable(s) => write!(f, "almost-{s}-stable"),
        }
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<(), HypergraphError> {
    if v == 0 || v > n {
        Err(HypergraphError::VertexOutOfRange {
            index: 0,
            vertex: v,
            n,
        })
    } else {
        Ok(())
    }
}

/// `s <= |x - y| <= n - s`.
pub fn is_stable_pair(x: Vertex, y: Vertex, n: usize, s: usize) -> Result<bool, HypergraphError> {
    check_vertex(x, n)?;
    check_vertex(y, n)?;
    if x == y {
        return Err(HypergraphError::SameVertex(x));
    }
    Ok(stable_pair_unchecked(x, y, n, s))
}

#[inline]
pub(crate) fn stable_pair_unchecked(x: Vertex, y: Vertex, n: usize, s: usize) -> bool {
    let d = x.abs_diff(y);
    s <= d && d + s <= n
}

pub fn is_stable_set(set: &[Vertex], n: usize, kind: StabilityKind) -> Result<bool, HypergraphError> {
    if let Some(&v) = set.iter().find(|&&v| v == 0 || v > n) {
        return Err(HypergraphError::VertexOutOfRange {
            index: 0,
            vertex: v,
            n,
        });
    }
    Ok(stable_set_unchecked(set, n, kind))
}

pub(crate) fn stable_set_unchecked(set: &[Vertex], n: usize, kind: StabilityKind) -> bool {
    for (i, &x) in set.iter().enumerate() {
        for &y in &set[i + 1..] {
            let ok = match kind {
                StabilityKind::Stable(s) => stable_pair_unchecked(x, y, n, s),
                StabilityKind::AlmostStable(s) => x.abs_diff(y) >= s,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Edges of `h` that are stable of the requested kind, on the same ground set.
pub fn stable_subhypergraph(h: &Hypergraph, kind: StabilityKind) -> Hypergraph {
    h.filter_edges(|e| stable_set_unchecked(e, h.n(), kind))
}

/// All pairs of `[n]` that are not `s`-stable, in lexicographic order.
pub(crate) fn non_stable_pairs(n: usize, s: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for x in 1..=n {
        for y in x + 1..=n {
            if !stable_pair_unchecked(x, y, n, s) {
                out.push(vec![x, y]);
            }
        }
    }
    out
}
