use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::{f_n_s, ConstructionError};
use crate::hypercore::{non_stable_pairs, Edge, Hypergraph};

/// Every `r`-subset of `[n]`.
pub fn complete_uniform(n: usize, r: usize) -> Result<Hypergraph, ConstructionError> {
    if r == 0 || r > n {
        return Err(ConstructionError::OutOfRange(format!("complete_uniform needs 1 <= r <= n, got n={n} r={r}")));
    }
    Ok(Hypergraph::from_canonical(n, subsets(&(1..=n).collect::<Vec<_>>(), r)))
}

/// `k`-subsets of `items` in lexicographic order.
fn subsets(items: &[usize], k: usize) -> Vec<Edge> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Edge>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `F_{3s-1}^s` together with the arities `s+1 ..= s + ⌈(s-3)/2⌉` it serves.
pub fn directrs_graph(s: usize) -> Result<(Hypergraph, RangeInclusive<usize>), ConstructionError> {
    if s < 4 {
        return Err(ConstructionError::OutOfRange(format!("directrs_graph needs s >= 4, got {s}")));
    }
    Ok((f_n_s(3 * s - 1, s)?, directrs_range(s)))
}

pub fn directrs_range(s: usize) -> RangeInclusive<usize> {
    s + 1..=s + (s - 3).div_ceil(2)
}

/// `F_n^s` with `n = s(l+1) + 1`.
pub fn freers1_graph(s: usize, l: usize) -> Result<Hypergraph, ConstructionError> {
    if s < 2 || l < 2 {
        return Err(ConstructionError::OutOfRange(format!("freers1_graph needs s, l >= 2, got s={s} l={l}")));
    }
    f_n_s(s * (l + 1) + 1, s)
}

/// On `n = ls(rs-1)`: all `s`-subsets of `A = {ls, 2ls, …, (rs-1)ls}` plus
/// every non-`s`-stable pair. `l = 1` is accepted; see
/// [`jafari_within_hypothesis`].
pub fn jafari_counterexample(r: usize, s: usize, l: usize) -> Result<Hypergraph, ConstructionError> {
    if r < 2 || s < 2 || l < 1 {
        return Err(ConstructionError::OutOfRange(format!(
            "jafari_counterexample needs r, s >= 2 and l >= 1, got r={r} s={s} l={l}"
        )));
    }
    let step = l * s;
    let n = step * (r * s - 1);
    let a: Vec<usize> = (1..r * s).map(|i| i * step).collect();
    let mut edges = subsets(&a, s);
    edges.extend(non_stable_pairs(n, s));
    Ok(Hypergraph::new(n, edges)?)
}

/// The construction is stated for `l >= 2`; `l = 1` is built but flagged.
pub fn jafari_within_hypothesis(l: usize) -> bool {
    l >= 2
}

/// On `n = lr(2r-1)`: the non-`r`-stable pairs plus a clique on the multiples
/// `lr, 2lr, …, (2r-1)lr`.
pub fn frick_gap_graph(r: usize, l: usize) -> Result<Hypergraph, ConstructionError> {
    if r < 2 || l < 1 {
        return Err(ConstructionError::OutOfRange(format!("frick_gap_graph needs r >= 2 and l >= 1, got r={r} l={l}")));
    }
    let step = l * r;
    let n = step * (2 * r - 1);
    let multiples: Vec<usize> = (1..2 * r).map(|a| a * step).collect();
    let mut edges = subsets(&multiples, 2);
    edges.extend(non_stable_pairs(n, r));
    Ok(Hypergraph::new(n, edges)?)
}

/// The clique `{lr, 2lr, …, (2r-1)lr}` of [`frick_gap_graph`].
pub fn frick_gap_clique(r: usize, l: usize) -> Vec<usize> {
    (1..2 * r).map(|a| a * l * r).collect()
}

/// Named family with its parameters, as accepted on the command line and in
/// JSON (`{"family": "fns", "n": 11, "s": 3}`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Family {
    Fns { n: usize, s: usize },
    CompleteUniform { n: usize, r: usize },
    /// `complete_uniform(rs - 1, r)`.
    Trivial { r: usize, s: usize },
    DirectRs { s: usize },
    Freers1 { s: usize, l: usize },
    JafariCe { r: usize, s: usize, l: usize },
    FrickGap { r: usize, l: usize },
}

impl Family {
    pub const NAMES: [&'static str; 7] = [
        "fns",
        "complete-uniform",
        "trivial",
        "direct-rs",
        "freers1",
        "jafari-ce",
        "frick-gap",
    ];

    /// Builds a family from its name and a parameter lookup.
    pub fn from_parts(name: &str, get: impl Fn(&str) -> Option<usize>) -> Result<Family, ConstructionError> {
        let need = |key: &str| {
            get(key).ok_or_else(|| ConstructionError::OutOfRange(format!("family `{name}` needs parameter `{key}`")))
        };
        Ok(match name {
            "fns" => Family::Fns { n: need("n")?, s: need("s")? },
            "complete-uniform" => Family::CompleteUniform { n: need("n")?, r: need("r")? },
            "trivial" => Family::Trivial { r: need("r")?, s: need("s")? },
            "direct-rs" => Family::DirectRs { s: need("s")? },
            "freers1" => Family::Freers1 { s: need("s")?, l: need("l")? },
            "jafari-ce" => Family::JafariCe {
                r: need("r")?,
                s: need("s")?,
                l: need("l")?,
            },
            "frick-gap" => Family::FrickGap { r: need("r")?, l: need("l")? },
            other => return Err(ConstructionError::UnknownFamily(other.to_owned())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Fns { .. } => "fns",
            Family::CompleteUniform { .. } => "complete-uniform",
            Family::Trivial { .. } => "trivial",
            Family::DirectRs { .. } => "direct-rs",
            Family::Freers1 { .. } => "freers1",
            Family::JafariCe { .. } => "jafari-ce",
            Family::FrickGap { .. } => "frick-gap",
        }
    }

    /// Stable identifier such as `jafari-ce(r=2,s=2,l=1)`.
    pub fn id(&self) -> String {
        let params = match *self {
            Family::Fns { n, s } => format!("n={n},s={s}"),
            Family::CompleteUniform { n, r } => format!("n={n},r={r}"),
            Family::Trivial { r, s } => format!("r={r},s={s}"),
            Family::DirectRs { s } => format!("s={s}"),
            Family::Freers1 { s, l } => format!("s={s},l={l}"),
            Family::JafariCe { r, s, l } => format!("r={r},s={s},l={l}"),
            Family::FrickGap { r, l } => format!("r={r},l={l}"),
        };
        format!("{}({params})", self.name())
    }

    pub fn build(&self) -> Result<Hypergraph, ConstructionError> {
        match *self {
            Family::Fns { n, s } => f_n_s(n, s),
            Family::CompleteUniform { n, r } => complete_uniform(n, r),
            Family::Trivial { r, s } => {
                if r < 2 || s < 2 {
                    return Err(ConstructionError::OutOfRange(format!(
                        "trivial example needs r, s >= 2, got r={r} s={s}"
                    )));
                }
                complete_uniform(r * s - 1, r)
            }
            Family::DirectRs { s } => directrs_graph(s).map(|(g, _)| g),
            Family::Freers1 { s, l } => freers1_graph(s, l),
            Family::JafariCe { r, s, l } => jafari_counterexample(r, s, l),
            Family::FrickGap { r, l } => frick_gap_graph(r, l),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{stable_subhypergraph, StabilityKind};
    use crate::solvers::{matching_number, Deadline};

    #[test]
    fn complete_uniform_counts() {
        assert_eq!(complete_uniform(8, 3).unwrap().num_edges(), 56);
        assert_eq!(complete_uniform(5, 5).unwrap().num_edges(), 1);
        let singles = complete_uniform(3, 1).unwrap();
        assert_eq!(singles.edges(), &[vec![1], vec![2], vec![3]]);
        assert!(complete_uniform(3, 4).is_err());
        assert!(complete_uniform(3, 0).is_err());
    }

    #[test]
    fn directrs_ranges() {
        let (g, range) = directrs_graph(4).unwrap();
        assert_eq!((g.n(), range), (11, 5..=5));
        let (g, range) = directrs_graph(5).unwrap();
        assert_eq!((g.n(), range), (14, 6..=6));
        let (g, range) = directrs_graph(7).unwrap();
        assert_eq!((g.n(), range), (20, 8..=9));
        assert!(directrs_graph(3).is_err());
    }

    #[test]
    fn freers1_sizes() {
        assert_eq!(freers1_graph(2, 2).unwrap(), f_n_s(7, 2).unwrap());
        assert_eq!(freers1_graph(3, 2).unwrap(), f_n_s(10, 3).unwrap());
        assert_eq!(freers1_graph(2, 3).unwrap(), f_n_s(9, 2).unwrap());
        assert!(freers1_graph(2, 1).is_err());
    }

    #[test]
    fn jafari_small_cases() {
        let j = jafari_counterexample(2, 2, 1).unwrap();
        assert_eq!(j.n(), 6);
        assert_eq!(j.num_edges(), 9);
        let stable = stable_subhypergraph(&j, StabilityKind::Stable(2));
        assert_eq!(stable.edges(), &[vec![2, 4], vec![2, 6], vec![4, 6]]);

        let j2 = jafari_counterexample(2, 2, 2).unwrap();
        assert_eq!(j2.n(), 12);
        assert_eq!(j2.num_edges(), 3 + 12);
        for e in [[4, 8], [4, 12], [8, 12]] {
            assert!(j2.contains_edge(&e));
        }
        assert!(jafari_counterexample(1, 2, 2).is_err());
        assert!(!jafari_within_hypothesis(1));
    }

    #[test]
    fn frick_gap_cases() {
        assert_eq!(frick_gap_graph(2, 1).unwrap(), jafari_counterexample(2, 2, 1).unwrap());

        let g = frick_gap_graph(3, 1).unwrap();
        assert_eq!(g.n(), 15);
        let stable = stable_subhypergraph(&g, StabilityKind::Stable(3));
        let clique = frick_gap_clique(3, 1);
        assert_eq!(clique, vec![3, 6, 9, 12, 15]);
        assert_eq!(stable.num_edges(), 10);
        assert!(stable.edges().iter().all(|e| clique.contains(&e[0]) && clique.contains(&e[1])));
        assert!(matching_number(&stable, Deadline::none()).unwrap().size <= 2);
    }

    #[test]
    fn family_json_and_parts() {
        let f: Family = serde_json::from_str(r#"{"family": "fns", "n": 11, "s": 3}"#).unwrap();
        assert_eq!(f, Family::Fns { n: 11, s: 3 });
        assert_eq!(f.build().unwrap().num_edges(), 22);
        assert_eq!(f.id(), "fns(n=11,s=3)");
        assert!(serde_json::from_str::<Family>(r#"{"family": "fns", "n": 11}"#).is_err());

        let g = Family::from_parts("jafari-ce", |k| match k {
            "r" | "s" => Some(2),
            "l" => Some(1),
            _ => None,
        })
        .unwrap();
        assert_eq!(g.build().unwrap().n(), 6);
        assert!(Family::from_parts("nope", |_| Some(1)).is_err());
        assert!(Family::from_parts("fns", |_| None).is_err());
        for name in Family::NAMES {
            assert_eq!(Family::from_parts(name, |_| Some(2)).map(|f| f.name()).unwrap_or(name), name);
        }
    }
}
