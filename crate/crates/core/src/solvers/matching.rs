use serde::{Deserialize, Serialize};

use super::{bits, edge_masks, Deadline, SolveError, Ticker};
use crate::hypercore::{Edge, Hypergraph};

/// Maximum family of pairwise disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub size: usize,
    pub edges: Vec<Edge>,
}

/// Matching number `ν(H)` with one maximum witness.
pub fn matching_number(h: &Hypergraph, deadline: Deadline) -> Result<Matching, SolveError> {
    let masks = edge_masks(h)?;
    let mut ticker = Ticker::new(deadline);
    let best = max_disjoint_family(&masks, &mut ticker)?;
    Ok(Matching {
        size: best.len(),
        edges: best.iter().map(|&i| h.edges()[i].clone()).collect(),
    })
}

/// Branch and bound over the lowest-degree uncovered vertex: either one of
/// its edges joins the family, or the vertex stays uncovered.
pub(crate) fn max_disjoint_family(masks: &[u64], ticker: &mut Ticker) -> Result<Vec<usize>, SolveError> {
    let mut best = greedy(masks);
    let avail: Vec<usize> = (0..masks.len()).collect();
    let min_size = masks.iter().map(|m| m.count_ones()).min().unwrap_or(1).max(1);
    let mut cur = Vec::new();
    branch(masks, &avail, min_size, &mut cur, &mut best, ticker)?;
    best.sort_unstable();
    Ok(best)
}

fn greedy(masks: &[u64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..masks.len()).collect();
    order.sort_by_key(|&i| (masks[i].count_ones(), i));
    let mut used = 0u64;
    let mut out = Vec::new();
    for i in order {
        if masks[i] & used == 0 {
            used |= masks[i];
            out.push(i);
        }
    }
    out
}

fn branch(
    masks: &[u64],
    avail: &[usize],
    min_size: u32,
    cur: &mut Vec<usize>,
    best: &mut Vec<usize>,
    ticker: &mut Ticker,
) -> Result<(), SolveError> {
    ticker.tick()?;
    if avail.is_empty() {
        if cur.len() > best.len() {
            best.clone_from(cur);
        }
        return Ok(());
    }
    let union = avail.iter().fold(0u64, |u, &i| u | masks[i]);
    let bound = avail.len().min((union.count_ones() / min_size) as usize);
    if cur.len() + bound <= best.len() {
        return Ok(());
    }
    // vertex of least positive degree among available edges
    let mut deg = [0u16; 64];
    for &i in avail {
        for v in bits(masks[i]) {
            deg[v] += 1;
        }
    }
    let pivot = bits(union).min_by_key(|&v| (deg[v], v)).expect("union is nonempty");
    let pivot_bit = 1u64 << pivot;

    for &i in avail.iter().filter(|&&i| masks[i] & pivot_bit != 0) {
        let rest: Vec<usize> = avail.iter().copied().filter(|&j| masks[j] & masks[i] == 0).collect();
        cur.push(i);
        branch(masks, &rest, min_size, cur, best, ticker)?;
        cur.pop();
    }
    let rest: Vec<usize> = avail.iter().copied().filter(|&j| masks[j] & pivot_bit == 0).collect();
    branch(masks, &rest, min_size, cur, best, ticker)
}

/// True iff some `k` of `masks` are pairwise disjoint.
pub(crate) fn has_disjoint_family(masks: &[u64], k: usize) -> bool {
    fn go(masks: &[u64], start: usize, used: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if masks.len() - start < need {
            return false;
        }
        for i in start..masks.len() {
            if masks.len() - i < need {
                break;
            }
            if masks[i] & used == 0 && go(masks, i + 1, used | masks[i], need - 1) {
                return true;
            }
        }
        false
    }
    go(masks, 0, 0, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::vertex_mask;

    fn brute_force(h: &Hypergraph) -> usize {
        let masks = edge_masks(h).unwrap();
        let m = masks.len();
        let mut best = 0;
        for subset in 0u32..(1 << m) {
            let mut used = 0u64;
            let mut ok = true;
            for (i, &e) in masks.iter().enumerate() {
                if subset & (1 << i) != 0 {
                    if used & e != 0 {
                        ok = false;
                        break;
                    }
                    used |= e;
                }
            }
            if ok {
                best = best.max(subset.count_ones() as usize);
            }
        }
        best
    }

    fn cycle(n: usize) -> Hypergraph {
        Hypergraph::new(n, (1..=n).map(|i| vec![i, i % n + 1])).unwrap()
    }

    #[test]
    fn examples() {
        let tri = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(matching_number(&tri, Deadline::none()).unwrap().size, 1);

        let pm = Hypergraph::new(6, vec![vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap();
        let m = matching_number(&pm, Deadline::none()).unwrap();
        assert_eq!(m.size, 3);
        assert_eq!(m.edges, pm.edges());

        assert_eq!(brute_force(&cycle(6)), 3);
        assert_eq!(matching_number(&cycle(6), Deadline::none()).unwrap().size, 3);
        assert_eq!(matching_number(&Hypergraph::edgeless(4), Deadline::none()).unwrap().size, 0);
    }

    #[test]
    fn witness_is_disjoint_and_matches_brute_force() {
        let hs = [
            cycle(7),
            cycle(9),
            Hypergraph::new(
                7,
                vec![vec![1, 2, 3], vec![3, 4, 5], vec![5, 6, 7], vec![1, 7], vec![2, 4, 6], vec![2, 5]],
            )
            .unwrap(),
        ];
        for h in &hs {
            let m = matching_number(h, Deadline::none()).unwrap();
            assert_eq!(m.size, brute_force(h));
            assert!(m.edges.iter().all(|e| h.contains_edge(e)));
            let wm: Vec<u64> = m.edges.iter().map(|e| vertex_mask(e)).collect();
            assert!(has_disjoint_family(&wm, wm.len()));
        }
    }

    #[test]
    fn disjoint_family_queries() {
        let masks = edge_masks(&cycle(6)).unwrap();
        assert!(has_disjoint_family(&masks, 0));
        assert!(has_disjoint_family(&masks, 3));
        assert!(!has_disjoint_family(&masks, 4));
        assert!(!has_disjoint_family(&[], 1));
    }
}
