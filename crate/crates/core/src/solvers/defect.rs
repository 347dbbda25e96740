use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::colorable::color_search;
use super::{bit, bits, edge_masks, Deadline, SolveError, Ticker};
use crate::hypercore::{Hypergraph, Vertex};

/// Removed vertex set plus an `r`-part partition of the remainder with no
/// edge inside one part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DefectCertificate {
    pub removed: Vec<Vertex>,
    pub parts: Vec<Vec<Vertex>>,
    pub equitable: bool,
}

impl DefectCertificate {
    /// Builds the certificate from per-vertex part labels; `lift` maps a
    /// label index to the original vertex.
    pub(crate) fn from_labels(
        removed: Vec<Vertex>,
        labels: &[usize],
        lift: impl Fn(usize) -> Vertex,
        r: usize,
        equitable: bool,
    ) -> Self {
        let mut parts = vec![Vec::new(); r];
        for (i, &c) in labels.iter().enumerate() {
            parts[c].push(lift(i));
        }
        for p in &mut parts {
            p.sort_unstable();
        }
        DefectCertificate {
            removed,
            parts,
            equitable,
        }
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

/// `cd^r(H)` or `ecd^r(H)` with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Defect {
    pub value: usize,
    pub certificate: DefectCertificate,
}

/// Memo entries kept before the table is dropped; without a deadline a large
/// search would otherwise grow it without bound.
const MEMO_LIMIT: usize = 1 << 16;

/// Least number of vertices whose removal leaves an (equitably) `r`-colorable
/// induced subhypergraph.
///
/// Removal sizes are tried in increasing order; within one size, subsets are
/// enumerated lexicographically and the first success is returned. Vertices of
/// singleton edges are always removed. Colorability results are memoized on
/// the relabeled induced subhypergraph, in a bounded table. `max_removal` defaults to `n`.
pub fn colorability_defect(
    h: &Hypergraph,
    r: usize,
    equitable: bool,
    max_removal: Option<usize>,
    deadline: Deadline,
) -> Result<Defect, SolveError> {
    if r == 0 {
        return Err(SolveError::InvalidArgument("defect needs r >= 1".into()));
    }
    let n = h.n();
    let masks = edge_masks(h)?;
    let forced = masks.iter().filter(|m| m.count_ones() == 1).fold(0u64, |a, &m| a | m);
    let free: Vec<usize> = (0..n).filter(|&v| forced & bit(v) == 0).collect();
    let cap = max_removal.unwrap_or(n);
    let mut ticker = Ticker::new(deadline);
    let mut memo: HashMap<(usize, Vec<u64>), Option<Vec<usize>>> = HashMap::new();

    for d in forced.count_ones() as usize..=n {
        if d > cap {
            return Err(SolveError::CapExceeded { cap });
        }
        let mut combos = Combinations::new(free.len(), d - forced.count_ones() as usize);
        while let Some(idx) = combos.next_combination() {
            ticker.tick()?;
            let removed = idx.iter().fold(forced, |m, &i| m | bit(free[i]));
            let kept: Vec<usize> = (0..n).filter(|&v| removed & bit(v) == 0).collect();
            let mut label_of = [0usize; 64];
            for (i, &v) in kept.iter().enumerate() {
                label_of[v] = i;
            }
            let mut induced: Vec<u64> = masks
                .iter()
                .filter(|&&m| m & removed == 0)
                .map(|&m| bits(m).fold(0u64, |a, v| a | bit(label_of[v])))
                .collect();
            induced.sort_unstable();
            let key = (kept.len(), induced);
            let labels = match memo.get(&key) {
                Some(hit) => hit.clone(),
                None => {
                    let res = color_search(kept.len(), &key.1, r, equitable, &mut ticker)?;
                    if memo.len() >= MEMO_LIMIT {
                        memo.clear();
                    }
                    memo.insert(key, res.clone());
                    res
                }
            };
            if let Some(labels) = labels {
                let certificate = DefectCertificate::from_labels(
                    bits(removed).map(|v| v + 1).collect(),
                    &labels,
                    |i| kept[i] + 1,
                    r,
                    equitable,
                );
                return Ok(Defect { value: d, certificate });
            }
        }
    }
    unreachable!("removing every vertex leaves a colorable remainder")
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    pub(crate) fn next_combination(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        self.done = true;
        None
    }
}
