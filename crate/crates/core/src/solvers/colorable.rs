use super::{bit, bits, edge_masks, Deadline, DefectCertificate, SolveError, Ticker};
use crate::hypercore::Hypergraph;

/// Partition of `[1, n]` into `r` parts with no edge inside a single part
/// (and part sizes within one of each other when `equitable`), or `None`.
///
/// The certificate has an empty removed set and exactly `r` parts, some of
/// which may be empty.
pub fn is_r_colorable(
    h: &Hypergraph,
    r: usize,
    equitable: bool,
    deadline: Deadline,
) -> Result<Option<DefectCertificate>, SolveError> {
    let masks = edge_masks(h)?;
    let mut ticker = Ticker::new(deadline);
    let labels = color_search(h.n(), &masks, r, equitable, &mut ticker)?;
    Ok(labels.map(|labels| DefectCertificate::from_labels(Vec::new(), &labels, |i| i + 1, r, equitable)))
}

/// Backtracking core shared by the colorability, chromatic and defect solvers.
///
/// `masks` use bit `i` for vertex `i + 1`. Returns a part label in `0..r` for
/// every vertex.
pub(crate) fn color_search(
    n: usize,
    masks: &[u64],
    r: usize,
    equitable: bool,
    ticker: &mut Ticker,
) -> Result<Option<Vec<usize>>, SolveError> {
    if masks.iter().any(|m| m.count_ones() == 1) {
        return Ok(None);
    }
    if r == 0 {
        return Ok((n == 0).then(Vec::new));
    }
    if masks.is_empty() && !equitable {
        return Ok(Some(vec![0; n]));
    }

    let order = vertex_order(n, masks);
    let mut pos = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    // an edge is decided when its last vertex (in search order) is placed
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &m in masks {
        let pm = bits(m).fold(0u64, |acc, v| acc | bit(pos[v]));
        let last = 63 - pm.leading_zeros() as usize;
        closing[last].push(pm & !bit(last));
    }

    let mut search = Search {
        n,
        r,
        closing,
        parts: vec![0; r],
        sizes: vec![0; r],
        label: vec![usize::MAX; n],
        sizes_rule: equitable.then(|| SizeRule::new(n, r)),
        at_upper: 0,
    };
    if !search.run(0, 0, ticker)? {
        return Ok(None);
    }
    let mut labels = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        labels[v] = search.label[p];
    }
    Ok(Some(labels))
}

/// Static ordering: repeatedly take the vertex closing the most edges, then
/// the one touching the most placed vertices, then the highest degree.
fn vertex_order(n: usize, masks: &[u64]) -> Vec<usize> {
    let mut degree = vec![0usize; n];
    for &m in masks {
        for v in bits(m) {
            degree[v] += 1;
        }
    }
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, (usize, usize, usize))> = None;
        for v in (0..n).filter(|&v| placed & bit(v) == 0) {
            let with = placed | bit(v);
            let mut closes = 0;
            let mut touches = 0;
            for &m in masks {
                if m & bit(v) != 0 {
                    if m & !with == 0 {
                        closes += 1;
                    }
                    if m & placed != 0 {
                        touches += 1;
                    }
                }
            }
            let key = (closes, touches, degree[v]);
            if best.is_none_or(|(_, k)| key > k) {
                best = Some((v, key));
            }
        }
        let (v, _) = best.expect("an unplaced vertex remains");
        placed |= bit(v);
        order.push(v);
    }
    order
}

/// Equitable target: `n mod r` parts of size `⌈n/r⌉`, the rest `⌊n/r⌋`.
struct SizeRule {
    lower: usize,
    upper: usize,
    max_at_upper: usize,
}

impl SizeRule {
    fn new(n: usize, r: usize) -> Self {
        SizeRule {
            lower: n / r,
            upper: n.div_ceil(r),
            max_at_upper: if n.is_multiple_of(r) { r } else { n % r },
        }
    }
}

struct Search {
    n: usize,
    r: usize,
    closing: Vec<Vec<u64>>,
    parts: Vec<u64>,
    sizes: Vec<usize>,
    label: Vec<usize>,
    sizes_rule: Option<SizeRule>,
    at_upper: usize,
}

impl Search {
    fn run(&mut self, p: usize, opened: usize, ticker: &mut Ticker) -> Result<bool, SolveError> {
        if p == self.n {
            return Ok(true);
        }
        ticker.tick()?;
        let limit = (opened + 1).min(self.r);
        for c in 0..limit {
            if let Some(rule) = &self.sizes_rule {
                let next = self.sizes[c] + 1;
                if next > rule.upper {
                    continue;
                }
                if rule.upper > rule.lower && next == rule.upper && self.at_upper == rule.max_at_upper {
                    continue;
                }
            }
            let part = self.parts[c];
            if self.closing[p].iter().any(|&m| m & !part == 0) {
                continue;
            }

            self.parts[c] |= bit(p);
            self.sizes[c] += 1;
            self.label[p] = c;
            let mut bumped = false;
            if let Some(rule) = &self.sizes_rule {
                if rule.upper > rule.lower && self.sizes[c] == rule.upper {
                    self.at_upper += 1;
                    bumped = true;
                }
            }

            let feasible = match &self.sizes_rule {
                Some(rule) => {
                    let deficit: usize = self.sizes.iter().map(|&s| rule.lower.saturating_sub(s)).sum();
                    deficit < self.n - p
                }
                None => true,
            };
            if feasible && self.run(p + 1, opened.max(c + 1), ticker)? {
                return Ok(true);
            }

            if bumped {
                self.at_upper -= 1;
            }
            self.parts[c] &= !bit(p);
            self.sizes[c] -= 1;
            self.label[p] = usize::MAX;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Hypergraph {
        Hypergraph::new(n, (1..=n).map(|i| vec![i, i % n + 1])).unwrap()
    }

    fn star() -> Hypergraph {
        Hypergraph::new(4, vec![vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap()
    }

    /// Oracle: try every map [n] -> [r].
    fn brute_force(h: &Hypergraph, r: usize, equitable: bool) -> bool {
        let n = h.n();
        let total = r.pow(n as u32);
        (0..total).any(|mut code| {
            let mut label = vec![0; n + 1];
            for l in label.iter_mut().skip(1) {
                *l = code % r;
                code /= r;
            }
            if equitable {
                let mut sizes = vec![0usize; r];
                for v in 1..=n {
                    sizes[label[v]] += 1;
                }
                if sizes.iter().max().unwrap() - sizes.iter().min().unwrap() > 1 {
                    return false;
                }
            }
            h.edges().iter().all(|e| e.iter().any(|&v| label[v] != label[e[0]]))
        })
    }

    #[test]
    fn odd_cycle_not_two_colorable() {
        assert!(is_r_colorable(&cycle(5), 2, false, Deadline::none()).unwrap().is_none());
        assert!(is_r_colorable(&cycle(5), 3, false, Deadline::none()).unwrap().is_some());
    }

    #[test]
    fn star_equitable() {
        assert!(!brute_force(&star(), 2, true));
        assert!(is_r_colorable(&star(), 2, true, Deadline::none()).unwrap().is_none());
        let cert = is_r_colorable(&star(), 2, false, Deadline::none()).unwrap().unwrap();
        assert!(cert.removed.is_empty());
        let mut sizes: Vec<usize> = cert.parts.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3]);
    }

    #[test]
    fn singleton_edge_is_never_colorable() {
        let h = Hypergraph::new(3, vec![vec![2]]).unwrap();
        for r in 1..4 {
            assert!(is_r_colorable(&h, r, false, Deadline::none()).unwrap().is_none());
        }
    }

    #[test]
    fn empty_cases() {
        let empty = Hypergraph::edgeless(0);
        let cert = is_r_colorable(&empty, 3, true, Deadline::none()).unwrap().unwrap();
        assert_eq!(cert.parts, vec![Vec::<usize>::new(); 3]);
        let five = Hypergraph::edgeless(5);
        let cert = is_r_colorable(&five, 2, true, Deadline::none()).unwrap().unwrap();
        let mut sizes: Vec<usize> = cert.parts.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
        assert!(is_r_colorable(&five, 0, false, Deadline::none()).unwrap().is_none());
    }

    #[test]
    fn matches_brute_force_on_small_hypergraphs() {
        let hs = vec![
            cycle(4),
            cycle(6),
            cycle(7),
            star(),
            Hypergraph::new(5, vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5], vec![2, 4]]).unwrap(),
            Hypergraph::new(6, vec![vec![1, 2, 3], vec![4, 5, 6], vec![1, 4], vec![2, 5], vec![3, 6]]).unwrap(),
            Hypergraph::new(7, (1..=5).map(|i| vec![i, i + 1, i + 2])).unwrap(),
        ];
        for h in &hs {
            for r in 1..=4 {
                for equitable in [false, true] {
                    let got = is_r_colorable(h, r, equitable, Deadline::none()).unwrap();
                    assert_eq!(got.is_some(), brute_force(h, r, equitable), "{h:?} r={r} eq={equitable}");
                    if let Some(cert) = got {
                        crate::solvers::validate_defect_certificate(h, r, &cert).unwrap();
                    }
                }
            }
        }
    }
}
