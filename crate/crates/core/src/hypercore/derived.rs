//! Hypergraphs derived from another one: induced subhypergraphs, the explicit
//! Kneser hypergraph, and the union with `F_n^s`.

use super::stability::{non_stable_pairs, stable_set_unchecked};
use super::{Edge, Hypergraph, HypergraphError, StabilityKind, Vertex};

/// Default cap on `|E(H)|` for [`kneser_hypergraph`].
pub const DEFAULT_KNESER_CAP: usize = 20;

/// Result of [`induced_subhypergraph`]: the relabeled hypergraph plus the
/// order-preserving map back to the original vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub hypergraph: Hypergraph,
    /// `kept[i]` is the original label of new vertex `i + 1`.
    pub kept: Vec<Vertex>,
}

impl Induced {
    pub fn lift(&self, v: Vertex) -> Vertex {
        self.kept[v - 1]
    }

    pub fn lift_set(&self, vs: &[Vertex]) -> Vec<Vertex> {
        vs.iter().map(|&v| self.lift(v)).collect()
    }
}

/// Removes `removed` and keeps the edges disjoint from it, relabeling the
/// remaining vertices to `[1, n - |removed|]` in increasing order.
pub fn induced_subhypergraph(h: &Hypergraph, removed: &[Vertex]) -> Result<Induced, HypergraphError> {
    let n = h.n();
    let mut gone = vec![false; n + 1];
    for &v in removed {
        if v == 0 || v > n {
            return Err(HypergraphError::VertexOutOfRange {
                index: 0,
                vertex: v,
                n,
            });
        }
        gone[v] = true;
    }
    let mut label = vec![0; n + 1];
    let mut kept = Vec::with_capacity(n);
    for v in 1..=n {
        if !gone[v] {
            kept.push(v);
            label[v] = kept.len();
        }
    }
    // relabeling is monotone, so each surviving edge stays increasing and the
    // edge list stays lexicographically sorted
    let edges = h
        .edges()
        .iter()
        .filter(|e| e.iter().all(|&v| !gone[v]))
        .map(|e| e.iter().map(|&v| label[v]).collect())
        .collect();
    Ok(Induced {
        hypergraph: Hypergraph::from_canonical(kept.len(), edges),
        kept,
    })
}

/// Explicit general Kneser hypergraph `KG^r(H)`.
///
/// Vertex `i` of the output is the `i`-th edge of `h` in canonical order;
/// hyperedges are the `r`-sets of pairwise disjoint edges. Refuses inputs with
/// more than `cap` edges.
pub fn kneser_hypergraph(h: &Hypergraph, r: usize, cap: usize) -> Result<Hypergraph, HypergraphError> {
    if r < 2 {
        return Err(HypergraphError::KneserArity(r));
    }
    let m = h.num_edges();
    if m > cap {
        return Err(HypergraphError::TooLargeForKneser { edges: m, cap });
    }
    let edges = h.edges();
    let mut out: Vec<Edge> = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    disjoint_families(edges, r, 0, &mut chosen, &mut out);
    Ok(Hypergraph::from_canonical(m, out))
}

fn disjoint_families(edges: &[Edge], r: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Edge>) {
    if chosen.len() == r {
        out.push(chosen.iter().map(|&i| i + 1).collect());
        return;
    }
    for i in start..edges.len() {
        if chosen.iter().all(|&j| disjoint(&edges[i], &edges[j])) {
            chosen.push(i);
            disjoint_families(edges, r, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// Sorted-merge disjointness test.
pub(crate) fn disjoint(a: &[Vertex], b: &[Vertex]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// `H ∪ F_n^s` for an `H` with no `s`-stable and no singleton edges.
pub fn augment_with_fns(h: &Hypergraph, s: usize) -> Result<Hypergraph, HypergraphError> {
    let n = h.n();
    for e in h.edges() {
        if e.len() == 1 {
            return Err(HypergraphError::SingletonEdge(e.clone()));
        }
        if stable_set_unchecked(e, n, StabilityKind::Stable(s)) {
            return Err(HypergraphError::StableEdge {
                edge: e.clone(),
                s,
            });
        }
    }
    let fns = Hypergraph::from_canonical(n, non_stable_pairs(n, s));
    h.union(&fns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Hypergraph {
        Hypergraph::new(n, (1..=n).map(|i| vec![i, i % n + 1])).unwrap()
    }

    fn jafari_221() -> Hypergraph {
        Hypergraph::new(
            6,
            vec![
                vec![2, 4],
                vec![2, 6],
                vec![4, 6],
                vec![1, 2],
                vec![2, 3],
                vec![3, 4],
                vec![4, 5],
                vec![5, 6],
                vec![1, 6],
            ],
        )
        .unwrap()
    }

    #[test]
    fn induced_removal_of_cycle_vertex_is_path() {
        let ind = induced_subhypergraph(&cycle(6), &[1]).unwrap();
        assert_eq!(ind.hypergraph.n(), 5);
        assert_eq!(
            ind.hypergraph.edges(),
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]]
        );
        assert_eq!(ind.kept, vec![2, 3, 4, 5, 6]);
        assert_eq!(ind.lift(1), 2);
    }

    #[test]
    fn induced_identity_and_jafari_example() {
        let h = jafari_221();
        let id = induced_subhypergraph(&h, &[]).unwrap();
        assert_eq!(id.hypergraph, h);

        let ind = induced_subhypergraph(&h, &[2, 4]).unwrap();
        assert_eq!(ind.hypergraph.n(), 4);
        assert_eq!(ind.kept, vec![1, 3, 5, 6]);
        // {5,6} -> {3,4}, {1,6} -> {1,4}
        assert_eq!(ind.hypergraph.edges(), &[vec![1, 4], vec![3, 4]]);
        assert!(induced_subhypergraph(&h, &[7]).is_err());
    }

    #[test]
    fn induced_removals_compose() {
        let h = jafari_221();
        let first = induced_subhypergraph(&h, &[2]).unwrap();
        // vertex 4 of the original is label 3 after removing 2
        let second = induced_subhypergraph(&first.hypergraph, &[3]).unwrap();
        let direct = induced_subhypergraph(&h, &[2, 4]).unwrap();
        assert_eq!(second.hypergraph, direct.hypergraph);
    }

    #[test]
    fn kneser_of_triangle_has_no_edges() {
        let tri = Hypergraph::new(6, vec![vec![2, 4], vec![2, 6], vec![4, 6]]).unwrap();
        let kg = kneser_hypergraph(&tri, 2, DEFAULT_KNESER_CAP).unwrap();
        assert_eq!(kg.n(), 3);
        assert_eq!(kg.num_edges(), 0);
    }

    #[test]
    fn kneser_of_k5_is_petersen() {
        let mut pairs = Vec::new();
        for a in 1..=5 {
            for b in a + 1..=5 {
                pairs.push(vec![a, b]);
            }
        }
        let h = Hypergraph::new(5, pairs).unwrap();
        let kg = kneser_hypergraph(&h, 2, DEFAULT_KNESER_CAP).unwrap();
        assert_eq!(kg.n(), 10);
        assert_eq!(kg.num_edges(), 15);
        // 3-regular
        let mut deg = [0; 11];
        for e in kg.edges() {
            for &v in e {
                deg[v] += 1;
            }
        }
        assert!(deg[1..].iter().all(|&d| d == 3));
    }

    #[test]
    fn kneser_empty_and_cap() {
        let kg = kneser_hypergraph(&Hypergraph::edgeless(5), 3, DEFAULT_KNESER_CAP).unwrap();
        assert_eq!(kg.n(), 0);
        assert_eq!(kg.num_edges(), 0);

        let big = cycle(21);
        assert_eq!(
            kneser_hypergraph(&big, 2, DEFAULT_KNESER_CAP),
            Err(HypergraphError::TooLargeForKneser { edges: 21, cap: 20 })
        );
        assert!(kneser_hypergraph(&cycle(4), 1, DEFAULT_KNESER_CAP).is_err());
    }

    #[test]
    fn augment_examples() {
        let c5 = augment_with_fns(&Hypergraph::edgeless(5), 2).unwrap();
        assert_eq!(c5, cycle(5));

        let h = Hypergraph::new(6, vec![vec![1, 2, 4]]).unwrap();
        let aug = augment_with_fns(&h, 2).unwrap();
        assert_eq!(aug.num_edges(), 7);
        assert!(aug.contains_edge(&[1, 2, 4]));
        assert!(cycle(6).edges().iter().all(|e| aug.contains_edge(e)));

        let bad = Hypergraph::new(6, vec![vec![2, 4]]).unwrap();
        assert!(matches!(
            augment_with_fns(&bad, 2),
            Err(HypergraphError::StableEdge { .. })
        ));
        let single = Hypergraph::new(6, vec![vec![2]]).unwrap();
        assert!(matches!(
            augment_with_fns(&single, 2),
            Err(HypergraphError::SingletonEdge(_))
        ));
    }

    #[test]
    fn disjoint_merge() {
        assert!(disjoint(&[1, 3, 5], &[2, 4, 6]));
        assert!(!disjoint(&[1, 3, 5], &[5, 6]));
        assert!(disjoint(&[], &[1]));
    }
}
