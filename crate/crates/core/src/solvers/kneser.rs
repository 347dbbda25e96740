use serde::{Deserialize, Serialize};

use super::{edge_masks, has_disjoint_family, max_disjoint_family, Deadline, SolveError, Ticker};
use crate::hypercore::{Edge, Hypergraph};

/// Partition of `E(H)` into classes none of which holds `r` pairwise disjoint
/// edges, i.e. a proper coloring of `KG^r(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KneserColoring {
    pub r: usize,
    pub classes: Vec<Vec<Edge>>,
    /// A maximum pairwise-disjoint subfamily of each class.
    pub witnesses: Vec<Vec<Edge>>,
}

impl KneserColoring {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Builds a coloring from class lists, computing the witnesses exactly.
    pub fn from_classes(r: usize, classes: Vec<Vec<Edge>>, deadline: Deadline) -> Result<Self, SolveError> {
        let mut ticker = Ticker::new(deadline);
        let mut witnesses = Vec::with_capacity(classes.len());
        for class in &classes {
            let masks: Vec<u64> = class.iter().map(|e| super::vertex_mask(e)).collect();
            let best = max_disjoint_family(&masks, &mut ticker)?;
            witnesses.push(best.into_iter().map(|i| class[i].clone()).collect());
        }
        Ok(KneserColoring { r, classes, witnesses })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KneserChromatic {
    pub chi: usize,
    pub coloring: KneserColoring,
}

/// `χ(KG^r(H))` without materializing the Kneser hypergraph.
///
/// `E(H) = ∅` gives 0; a nonempty edge set without `r` pairwise disjoint
/// edges gives 1. Otherwise iterative deepening over the class count, with
/// edges ordered by how many other edges they are disjoint from and the usual
/// "open at most one new class" symmetry breaking.
pub fn kneser_chromatic_number(h: &Hypergraph, r: usize, deadline: Deadline) -> Result<KneserChromatic, SolveError> {
    if r < 2 {
        return Err(SolveError::InvalidArgument(format!("Kneser arity must be >= 2, got {r}")));
    }
    let masks = edge_masks(h)?;
    let m = masks.len();
    let mut ticker = Ticker::new(deadline);
    if m == 0 {
        return Ok(KneserChromatic {
            chi: 0,
            coloring: KneserColoring {
                r,
                classes: Vec::new(),
                witnesses: Vec::new(),
            },
        });
    }
    let nu = max_disjoint_family(&masks, &mut ticker)?.len();
    let classes: Vec<Vec<usize>> = if nu < r {
        vec![(0..m).collect()]
    } else {
        let mut order: Vec<usize> = (0..m).collect();
        let disjoint_count: Vec<usize> = (0..m)
            .map(|i| masks.iter().filter(|&&o| o & masks[i] == 0).count())
            .collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(disjoint_count[i]), i));

        let greedy = greedy_classes(&masks, &order, r);
        let lower = nu.div_ceil(r - 1).max(2);
        let mut found = greedy;
        for t in lower..found.len() {
            ticker.check_now()?;
            let mut search = ClassSearch {
                masks: &masks,
                order: &order,
                r,
                t,
                classes: Vec::new(),
            };
            if search.run(0, &mut ticker)? {
                found = search.classes;
                break;
            }
        }
        found
    };

    let mut edge_classes: Vec<Vec<Edge>> = classes
        .iter()
        .map(|c| {
            let mut es: Vec<Edge> = c.iter().map(|&i| h.edges()[i].clone()).collect();
            es.sort();
            es
        })
        .collect();
    edge_classes.sort();
    let coloring = KneserColoring::from_classes(r, edge_classes, deadline)?;
    Ok(KneserChromatic {
        chi: coloring.num_classes(),
        coloring,
    })
}

fn fits(masks: &[u64], class: &[usize], e: usize, r: usize) -> bool {
    if r == 2 {
        return class.iter().all(|&f| masks[f] & masks[e] != 0);
    }
    let apart: Vec<u64> = class
        .iter()
        .map(|&f| masks[f])
        .filter(|&f| f & masks[e] == 0)
        .collect();
    apart.len() < r - 1 || !has_disjoint_family(&apart, r - 1)
}

fn greedy_classes(masks: &[u64], order: &[usize], r: usize) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &e in order {
        match classes.iter_mut().find(|c| fits(masks, c, e, r)) {
            Some(c) => c.push(e),
            None => classes.push(vec![e]),
        }
    }
    classes
}

struct ClassSearch<'a> {
    masks: &'a [u64],
    order: &'a [usize],
    r: usize,
    t: usize,
    classes: Vec<Vec<usize>>,
}

impl ClassSearch<'_> {
    fn run(&mut self, i: usize, ticker: &mut Ticker) -> Result<bool, SolveError> {
        if i == self.order.len() {
            return Ok(true);
        }
        ticker.tick()?;
        let e = self.order[i];
        for c in 0..self.classes.len() {
            if fits(self.masks, &self.classes[c], e, self.r) {
                self.classes[c].push(e);
                if self.run(i + 1, ticker)? {
                    return Ok(true);
                }
                self.classes[c].pop();
            }
        }
        if self.classes.len() < self.t {
            self.classes.push(vec![e]);
            if self.run(i + 1, ticker)? {
                return Ok(true);
            }
            self.classes.pop();
        }
        Ok(false)
    }
}
