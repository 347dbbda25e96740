//! Certificate checkers that use only hypergraph primitives: no solver state
//! and no search beyond plain enumeration.

use std::collections::BTreeMap;

use thiserror::Error;

use super::{DefectCertificate, KneserColoring};
use crate::hypercore::{disjoint, Coloring, Edge, Hypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid certificate: {0}")]
pub struct CertificateError(pub String);

fn fail<T>(msg: impl Into<String>) -> Result<T, CertificateError> {
    Err(CertificateError(msg.into()))
}

/// Checks a (possibly equitable) defect certificate for `r` parts.
pub fn validate_defect_certificate(h: &Hypergraph, r: usize, cert: &DefectCertificate) -> Result<(), CertificateError> {
    let n = h.n();
    if cert.parts.len() != r {
        return fail(format!("{} parts, expected {r}", cert.parts.len()));
    }
    // 0 = unseen, 1 = removed, k + 2 = part k
    let mut owner = vec![0usize; n + 1];
    let mut place = |v: usize, tag: usize| -> Result<(), CertificateError> {
        if v == 0 || v > n {
            return fail(format!("vertex {v} outside [1, {n}]"));
        }
        if owner[v] != 0 {
            return fail(format!("vertex {v} appears twice"));
        }
        owner[v] = tag;
        Ok(())
    };
    for &v in &cert.removed {
        place(v, 1)?;
    }
    for (k, part) in cert.parts.iter().enumerate() {
        for &v in part {
            place(v, k + 2)?;
        }
    }
    if let Some(v) = (1..=n).find(|&v| owner[v] == 0) {
        return fail(format!("vertex {v} is neither removed nor in a part"));
    }
    for e in h.edges() {
        let tag = owner[e[0]];
        if tag >= 2 && e.iter().all(|&v| owner[v] == tag) {
            return fail(format!("edge {e:?} lies inside part {}", tag - 1));
        }
    }
    if cert.equitable {
        let sizes: Vec<usize> = cert.parts.iter().map(Vec::len).collect();
        let (lo, hi) = (sizes.iter().min(), sizes.iter().max());
        if let (Some(lo), Some(hi)) = (lo, hi) {
            if hi - lo > 1 {
                return fail(format!("part sizes {sizes:?} are not equitable"));
            }
        }
    }
    Ok(())
}

pub fn validate_coloring(h: &Hypergraph, coloring: &Coloring) -> Result<(), CertificateError> {
    if coloring.domain_size() != h.n() {
        return fail(format!("coloring covers {} vertices, expected {}", coloring.domain_size(), h.n()));
    }
    if let Some(e) = h.edges().iter().find(|e| e.iter().all(|&v| coloring.color(v) == coloring.color(e[0]))) {
        return fail(format!("edge {e:?} is monochromatic"));
    }
    Ok(())
}

/// Checks that the classes partition `E(H)`, that no class holds `r`
/// pairwise disjoint edges, and that each witness is a maximum disjoint
/// subfamily of its class.
pub fn validate_kneser_coloring(h: &Hypergraph, r: usize, kc: &KneserColoring) -> Result<(), CertificateError> {
    if kc.r != r {
        return fail(format!("coloring is for r = {}, expected {r}", kc.r));
    }
    if kc.witnesses.len() != kc.classes.len() {
        return fail("one witness per class required");
    }
    let mut count: BTreeMap<&Edge, usize> = h.edges().iter().map(|e| (e, 0)).collect();
    for (k, class) in kc.classes.iter().enumerate() {
        if class.is_empty() {
            return fail(format!("class {k} is empty"));
        }
        for e in class {
            match count.get_mut(e) {
                Some(c) => *c += 1,
                None => return fail(format!("class {k} holds {e:?}, not an edge")),
            }
        }
    }
    if let Some((e, c)) = count.iter().find(|(_, &c)| c != 1) {
        return fail(format!("edge {e:?} is in {c} classes"));
    }
    for (k, (class, witness)) in kc.classes.iter().zip(&kc.witnesses).enumerate() {
        if witness.iter().any(|w| !class.contains(w)) {
            return fail(format!("witness of class {k} leaves the class"));
        }
        if !pairwise_disjoint(witness) {
            return fail(format!("witness of class {k} is not pairwise disjoint"));
        }
        if witness.len() + 1 > r {
            return fail(format!("class {k} has {} pairwise disjoint edges", witness.len()));
        }
        if let Some(bigger) = disjoint_subfamily(class, witness.len() + 1) {
            return fail(format!("class {k}: witness is not maximum, {bigger:?} is larger"));
        }
    }
    Ok(())
}

fn pairwise_disjoint(edges: &[Edge]) -> bool {
    edges
        .iter()
        .enumerate()
        .all(|(i, a)| edges[i + 1..].iter().all(|b| disjoint(a, b)))
}

/// Plain enumeration of `k`-subsets looking for a pairwise disjoint one.
fn disjoint_subfamily(class: &[Edge], k: usize) -> Option<Vec<Edge>> {
    fn go(class: &[Edge], start: usize, k: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return true;
        }
        for i in start..class.len() {
            if chosen.iter().all(|&j| disjoint(&class[i], &class[j])) {
                chosen.push(i);
                if go(class, i + 1, k, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    go(class, 0, k, &mut chosen).then(|| chosen.iter().map(|&i| class[i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6() -> Hypergraph {
        Hypergraph::new(6, (1..=6).map(|i| vec![i, i % 6 + 1])).unwrap()
    }

    #[test]
    fn defect_checks() {
        let h = c6();
        let good = DefectCertificate {
            removed: vec![],
            parts: vec![vec![1, 3, 5], vec![2, 4, 6]],
            equitable: true,
        };
        validate_defect_certificate(&h, 2, &good).unwrap();
        assert!(validate_defect_certificate(&h, 3, &good).is_err());

        let mono = DefectCertificate {
            removed: vec![],
            parts: vec![vec![1, 2, 5], vec![3, 4, 6]],
            equitable: false,
        };
        assert!(validate_defect_certificate(&h, 2, &mono).is_err());

        let missing = DefectCertificate {
            removed: vec![1],
            parts: vec![vec![3, 5], vec![2, 4]],
            equitable: false,
        };
        assert!(validate_defect_certificate(&h, 2, &missing).is_err());

        let twice = DefectCertificate {
            removed: vec![1],
            parts: vec![vec![1, 3, 5], vec![2, 4, 6]],
            equitable: false,
        };
        assert!(validate_defect_certificate(&h, 2, &twice).is_err());

        let uneven = DefectCertificate {
            removed: vec![2, 4, 6],
            parts: vec![vec![1, 3, 5], vec![]],
            equitable: true,
        };
        assert!(validate_defect_certificate(&h, 2, &uneven).is_err());
        let uneven_plain = DefectCertificate {
            equitable: false,
            ..uneven
        };
        assert!(validate_defect_certificate(&h, 2, &uneven_plain).is_ok());
    }

    #[test]
    fn kneser_checks() {
        let h = Hypergraph::new(6, vec![vec![1, 6], vec![2, 4]]).unwrap();
        let good = KneserColoring {
            r: 2,
            classes: vec![vec![vec![2, 4]], vec![vec![1, 6]]],
            witnesses: vec![vec![vec![2, 4]], vec![vec![1, 6]]],
        };
        validate_kneser_coloring(&h, 2, &good).unwrap();

        let merged = KneserColoring {
            r: 2,
            classes: vec![vec![vec![1, 6], vec![2, 4]]],
            witnesses: vec![vec![vec![1, 6]]],
        };
        assert!(validate_kneser_coloring(&h, 2, &merged).is_err());
        // at r = 3 one class is fine, but the witness must be maximum
        let merged3 = KneserColoring { r: 3, ..merged.clone() };
        assert!(validate_kneser_coloring(&h, 3, &merged3).is_err());
        let merged3 = KneserColoring {
            r: 3,
            classes: merged.classes.clone(),
            witnesses: vec![vec![vec![1, 6], vec![2, 4]]],
        };
        validate_kneser_coloring(&h, 3, &merged3).unwrap();

        let missing = KneserColoring {
            r: 2,
            classes: vec![vec![vec![2, 4]]],
            witnesses: vec![vec![vec![2, 4]]],
        };
        assert!(validate_kneser_coloring(&h, 2, &missing).is_err());

        let foreign = KneserColoring {
            r: 2,
            classes: vec![vec![vec![2, 4]], vec![vec![1, 6]], vec![vec![3, 5]]],
            witnesses: vec![vec![vec![2, 4]], vec![vec![1, 6]], vec![vec![3, 5]]],
        };
        assert!(validate_kneser_coloring(&h, 2, &foreign).is_err());
    }

    #[test]
    fn coloring_checks() {
        let h = c6();
        validate_coloring(&h, &Coloring::new(vec![1, 2, 1, 2, 1, 2]).unwrap()).unwrap();
        assert!(validate_coloring(&h, &Coloring::new(vec![1, 1, 2, 1, 2, 2]).unwrap()).is_err());
        assert!(validate_coloring(&h, &Coloring::new(vec![1, 2]).unwrap()).is_err());
    }
}
