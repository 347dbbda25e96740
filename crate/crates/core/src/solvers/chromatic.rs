use serde::{Deserialize, Serialize};

use super::colorable::color_search;
use super::{bit, bits, check_size, edge_masks, mask_vertices, Deadline, SolveError, Ticker};
use crate::hypercore::{Coloring, Hypergraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ChromaticNumber {
    Colorable { chi: usize, coloring: Coloring },
    /// A singleton edge is monochromatic under every coloring.
    Infeasible,
}

impl ChromaticNumber {
    pub fn value(&self) -> Option<usize> {
        match self {
            ChromaticNumber::Colorable { chi, .. } => Some(*chi),
            ChromaticNumber::Infeasible => None,
        }
    }
}

/// Least `r` admitting a proper (weak) `r`-coloring, by increasing `r`.
///
/// An edgeless hypergraph has `χ = 1`, or `0` on the empty ground set.
pub fn chromatic_number(h: &Hypergraph, deadline: Deadline) -> Result<ChromaticNumber, SolveError> {
    let masks = edge_masks(h)?;
    if h.has_singleton_edge() {
        return Ok(ChromaticNumber::Infeasible);
    }
    let n = h.n();
    if n == 0 {
        return Ok(ChromaticNumber::Colorable {
            chi: 0,
            coloring: Coloring::from_labels(&[]),
        });
    }
    let mut ticker = Ticker::new(deadline);
    for r in 1..=n {
        ticker.check_now()?;
        if let Some(labels) = color_search(n, &masks, r, false, &mut ticker)? {
            let coloring = Coloring::from_labels(&labels);
            debug_assert_eq!(coloring.num_colors(), r);
            return Ok(ChromaticNumber::Colorable { chi: r, coloring });
        }
    }
    unreachable!("n colors always suffice without singleton edges")
}

/// Maximum independent set of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSet {
    pub size: usize,
    pub vertices: Vec<Vertex>,
}

/// Independence number `α(G)` of a graph (every edge of size two).
pub fn independence_number(g: &Hypergraph, deadline: Deadline) -> Result<IndependentSet, SolveError> {
    if let Some(e) = g.edges().iter().find(|e| e.len() != 2) {
        return Err(SolveError::NotAGraph(e.clone()));
    }
    let n = g.n();
    check_size(n)?;
    let mut adj = vec![0u64; n];
    for e in g.edges() {
        let (a, b) = (e[0] - 1, e[1] - 1);
        adj[a] |= bit(b);
        adj[b] |= bit(a);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0u64;
    let mut ticker = Ticker::new(deadline);
    max_independent(&adj, all, 0, &mut best, &mut ticker)?;
    Ok(IndependentSet {
        size: best.count_ones() as usize,
        vertices: mask_vertices(best),
    })
}

fn max_independent(adj: &[u64], cand: u64, cur: u64, best: &mut u64, ticker: &mut Ticker) -> Result<(), SolveError> {
    ticker.tick()?;
    if cand == 0 {
        if cur.count_ones() > best.count_ones() {
            *best = cur;
        }
        return Ok(());
    }
    if cur.count_ones() + cand.count_ones() <= best.count_ones() {
        return Ok(());
    }
    // a vertex with no candidate neighbour is always taken
    if let Some(v) = bits(cand).find(|&v| adj[v] & cand == 0) {
        return max_independent(adj, cand & !bit(v), cur | bit(v), best, ticker);
    }
    let v = bits(cand)
        .max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
        .expect("cand is nonempty");
    max_independent(adj, cand & !adj[v] & !bit(v), cur | bit(v), best, ticker)?;
    max_independent(adj, cand & !bit(v), cur, best, ticker)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Hypergraph {
        Hypergraph::new(n, (1..=n).map(|i| vec![i, i % n + 1])).unwrap()
    }

    fn alpha_brute_force(g: &Hypergraph) -> usize {
        let n = g.n();
        (0u32..(1 << n))
            .filter(|s| g.edges().iter().all(|e| s & (1 << (e[0] - 1)) == 0 || s & (1 << (e[1] - 1)) == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5), Deadline::none()).unwrap().value(), Some(3));
        assert_eq!(chromatic_number(&cycle(6), Deadline::none()).unwrap().value(), Some(2));
        assert_eq!(chromatic_number(&Hypergraph::edgeless(1), Deadline::none()).unwrap().value(), Some(1));
        assert_eq!(chromatic_number(&Hypergraph::edgeless(0), Deadline::none()).unwrap().value(), Some(0));
        let single = Hypergraph::new(3, vec![vec![1], vec![2, 3]]).unwrap();
        assert_eq!(chromatic_number(&single, Deadline::none()).unwrap(), ChromaticNumber::Infeasible);
    }

    #[test]
    fn k6_minus_perfect_matching() {
        let mut edges = Vec::new();
        for a in 1..=6 {
            for b in a + 1..=6 {
                if b - a != 3 {
                    edges.push(vec![a, b]);
                }
            }
        }
        let g = Hypergraph::new(6, edges).unwrap();
        match chromatic_number(&g, Deadline::none()).unwrap() {
            ChromaticNumber::Colorable { chi, coloring } => {
                assert_eq!(chi, 3);
                assert!(coloring.is_proper_for(&g));
                assert_eq!(coloring.num_colors(), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(independence_number(&Hypergraph::edgeless(7), Deadline::none()).unwrap().size, 7);
        assert_eq!(alpha_brute_force(&cycle(5)), 2);
        let is = independence_number(&cycle(5), Deadline::none()).unwrap();
        assert_eq!(is.size, 2);
        for n in 3..=12 {
            let g = cycle(n);
            let is = independence_number(&g, Deadline::none()).unwrap();
            assert_eq!(is.size, alpha_brute_force(&g), "C_{n}");
            for e in g.edges() {
                assert!(!(is.vertices.contains(&e[0]) && is.vertices.contains(&e[1])));
            }
        }
    }

    #[test]
    fn alpha_rejects_hypergraphs() {
        let h = Hypergraph::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            independence_number(&h, Deadline::none()),
            Err(SolveError::NotAGraph(_))
        ));
    }
}
