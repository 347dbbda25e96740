use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::HypergraphError;

/// A vertex of the ground set `[1, n]`.
pub type Vertex = usize;

/// A hyperedge: strictly increasing list of vertices.
pub type Edge = Vec<Vertex>;

/// Finite hypergraph over the ground set `{1, …, n}`.
///
/// Edges are kept in canonical form: each edge strictly increasing, the edge
/// list sorted lexicographically and free of duplicates. Two hypergraphs are
/// equal iff they have the same `n` and the same edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    #[serde(default)]
    schema: Option<u32>,
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = HypergraphError;

    fn try_from(raw: RawHypergraph) -> Result<Self, Self::Error> {
        if let Some(schema) = raw.schema {
            if schema != 1 {
                return Err(HypergraphError::Schema(schema));
            }
        }
        Hypergraph::from_strict(raw.n, raw.edges)
    }
}

impl Hypergraph {
    /// Builds a hypergraph, sorting every edge and deduplicating the edge list.
    ///
    /// Empty edges, out-of-range vertices and vertices repeated inside one
    /// edge are rejected.
    pub fn new<E, I>(n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = Vertex>,
    {
        let mut set = BTreeSet::new();
        for (index, edge) in edges.into_iter().enumerate() {
            let mut edge: Edge = edge.into_iter().collect();
            edge.sort_unstable();
            check_edge(n, index, &edge)?;
            set.insert(edge);
        }
        Ok(Hypergraph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Strict constructor used by the parsers: edges must already be strictly
    /// increasing and pairwise distinct. Edge order is normalized.
    pub fn from_strict(n: usize, edges: Vec<Edge>) -> Result<Self, HypergraphError> {
        let mut set = BTreeSet::new();
        for (index, edge) in edges.into_iter().enumerate() {
            if let Some(w) = edge.windows(2).find(|w| w[0] >= w[1]) {
                return Err(if w[0] == w[1] {
                    HypergraphError::RepeatedVertex { index, vertex: w[0] }
                } else {
                    HypergraphError::NotIncreasing { index }
                });
            }
            check_edge(n, index, &edge)?;
            if !set.insert(edge) {
                return Err(HypergraphError::DuplicateEdge { index });
            }
        }
        Ok(Hypergraph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Hypergraph on `[1, n]` with no edges.
    pub fn edgeless(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Trusted constructor for edge lists already in canonical form.
    pub(crate) fn from_canonical(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges
            .iter()
            .all(|e| !e.is_empty() && e.windows(2).all(|w| w[0] < w[1]) && e[e.len() - 1] <= n));
        Hypergraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(edge))
            .is_ok()
    }

    /// Position of `edge` in canonical order, if present.
    pub fn edge_index(&self, edge: &[Vertex]) -> Option<usize> {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).ok()
    }

    /// True when every edge has exactly two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    pub fn has_singleton_edge(&self) -> bool {
        self.edges.iter().any(|e| e.len() == 1)
    }

    /// Vertices appearing in singleton edges, increasing.
    pub fn singleton_vertices(&self) -> Vec<Vertex> {
        self.edges
            .iter()
            .filter(|e| e.len() == 1)
            .map(|e| e[0])
            .collect()
    }

    /// Same ground set, keeping only edges for which `keep` holds.
    pub fn filter_edges(&self, mut keep: impl FnMut(&[Vertex]) -> bool) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: self.edges.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }

    /// Union of the edge sets of two hypergraphs over the same ground set.
    pub fn union(&self, other: &Hypergraph) -> Result<Hypergraph, HypergraphError> {
        if self.n != other.n {
            return Err(HypergraphError::GroundMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let set: BTreeSet<Edge> = self.edges.iter().chain(&other.edges).cloned().collect();
        Ok(Hypergraph {
            n: self.n,
            edges: set.into_iter().collect(),
        })
    }

    /// Adds one edge, returning the enlarged hypergraph.
    pub fn with_edge(&self, edge: impl IntoIterator<Item = Vertex>) -> Result<Hypergraph, HypergraphError> {
        let extra = Hypergraph::new(self.n, [edge])?;
        self.union(&extra)
    }
}

fn check_edge(n: usize, index: usize, edge: &[Vertex]) -> Result<(), HypergraphError> {
    if edge.is_empty() {
        return Err(HypergraphError::EmptyEdge { index });
    }
    if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
        return Err(HypergraphError::RepeatedVertex {
            index,
            vertex: w[0],
        });
    }
    if let Some(&vertex) = edge.iter().find(|&&v| v == 0 || v > n) {
        return Err(HypergraphError::VertexOutOfRange { index, vertex, n });
    }
    Ok(())
}

impl fmt::Display for Hypergraph {
    /// Text format: `hg <n> <m>` followed by one edge per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hg {} {}", self.n, self.edges.len())?;
        for edge in &self.edges {
            let mut first = true;
            for v in edge {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_dedups() {
        let h = Hypergraph::new(4, vec![vec![3, 1], vec![2, 4], vec![1, 3]]).unwrap();
        assert_eq!(h.edges(), &[vec![1, 3], vec![2, 4]]);
        assert!(h.contains_edge(&[1, 3]));
        assert!(!h.contains_edge(&[1, 2]));
    }

    #[test]
    fn lexicographic_edge_order() {
        let h = Hypergraph::new(4, vec![vec![1, 3], vec![1, 2, 3], vec![1, 2]]).unwrap();
        assert_eq!(h.edges(), &[vec![1, 2], vec![1, 2, 3], vec![1, 3]]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Hypergraph::new(3, vec![Vec::<usize>::new()]),
            Err(HypergraphError::EmptyEdge { index: 0 })
        );
        assert_eq!(
            Hypergraph::new(3, vec![vec![1, 4]]),
            Err(HypergraphError::VertexOutOfRange {
                index: 0,
                vertex: 4,
                n: 3
            })
        );
        assert!(matches!(
            Hypergraph::new(3, vec![vec![0, 1]]),
            Err(HypergraphError::VertexOutOfRange { vertex: 0, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, vec![vec![2, 2]]),
            Err(HypergraphError::RepeatedVertex { vertex: 2, .. })
        ));
    }

    #[test]
    fn strict_rejects_unsorted_and_duplicates() {
        assert_eq!(
            Hypergraph::from_strict(3, vec![vec![2, 1]]),
            Err(HypergraphError::NotIncreasing { index: 0 })
        );
        assert_eq!(
            Hypergraph::from_strict(3, vec![vec![1, 2], vec![1, 2]]),
            Err(HypergraphError::DuplicateEdge { index: 1 })
        );
    }

    #[test]
    fn union_requires_same_ground_set() {
        let a = Hypergraph::edgeless(3);
        let b = Hypergraph::edgeless(4);
        assert!(a.union(&b).is_err());
    }

    #[test]
    fn display_text_format() {
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(h.to_string(), "hg 3 2\n1 2\n2 3\n");
    }
}
