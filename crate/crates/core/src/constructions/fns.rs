//! The circulant graph `F_n^s` of non-`s`-stable pairs and the explicit
//! colorings and defect witnesses built on it.

use super::ConstructionError;
use crate::hypercore::{non_stable_pairs, Coloring, Hypergraph};
use crate::solvers::{validate_coloring, validate_defect_certificate, DefectCertificate};

/// `F_n^s`: the graph on `[n]` whose edges are the pairs that are not `s`-stable.
pub fn f_n_s(n: usize, s: usize) -> Result<Hypergraph, ConstructionError> {
    if n < 2 || s < 1 {
        return Err(ConstructionError::OutOfRange(format!("F_n^s needs n >= 2 and s >= 1, got n={n} s={s}")));
    }
    Ok(Hypergraph::from_canonical(n, non_stable_pairs(n, s)))
}

fn check_formula_scope(n: usize, s: usize) -> Result<(), ConstructionError> {
    if s < 2 || n < 2 * s {
        return Err(ConstructionError::OutOfRange(format!(
            "formula out of scope: needs s >= 2 and n >= 2s, got n={n} s={s}"
        )));
    }
    Ok(())
}

/// `⌈n / a⌉` with `a = ⌊n/s⌋`, the chromatic number of `F_n^s` for `n >= 2s`.
pub fn fns_chromatic_formula(n: usize, s: usize) -> Result<usize, ConstructionError> {
    check_formula_scope(n, s)?;
    Ok(n.div_ceil(n / s))
}

/// `⌊n/s⌋`, the independence number of `F_n^s` for `n >= 2s`.
pub fn fns_independence_formula(n: usize, s: usize) -> Result<usize, ConstructionError> {
    check_formula_scope(n, s)?;
    Ok(n / s)
}

/// Proper coloring of `F_n^s` with `⌈n/a⌉` colors, `a = ⌊n/s⌋`.
///
/// Vertices `1..=n` are colored left to right by `n - a⌊n/a⌋` copies of the
/// long block `1..=⌈n/a⌉` followed by `a⌊n/a⌋ + a - n` copies of the short
/// block `1..=⌊n/a⌋`. When `a` divides `n` the two blocks coincide.
pub fn block_coloring(n: usize, s: usize) -> Result<Coloring, ConstructionError> {
    check_formula_scope(n, s)?;
    let a = n / s;
    let short = n / a;
    let long = n.div_ceil(a);
    let long_reps = n - a * short;
    let short_reps = a * short + a - n;

    let mut colors = Vec::with_capacity(n);
    for _ in 0..long_reps {
        colors.extend(1..=long);
    }
    for _ in 0..short_reps {
        colors.extend(1..=short);
    }
    assert_eq!(colors.len(), n, "block arrangement must cover [n]");
    let coloring = Coloring::new(colors).expect("blocks use every color");
    assert_eq!(coloring.num_colors(), long);
    validate_coloring(&f_n_s(n, s)?, &coloring).expect("block coloring of F_n^s is proper");
    Ok(coloring)
}

/// Witness that `cd^r(F_n^s) <= s - 1` when `r >= s`: drop `n-s+2..=n` and
/// color the rest by residue mod `s`, padding with empty parts up to `r`.
pub fn residue_defect_witness(n: usize, s: usize, r: usize) -> Result<DefectCertificate, ConstructionError> {
    if s < 2 || r < s || n < s {
        return Err(ConstructionError::OutOfRange(format!(
            "residue witness needs r >= s >= 2 and n >= s, got n={n} s={s} r={r}"
        )));
    }
    let keep = n - s + 1;
    let mut parts = vec![Vec::new(); r];
    for x in 1..=keep {
        parts[(x - 1) % s].push(x);
    }
    let cert = DefectCertificate {
        removed: (keep + 1..=n).collect(),
        parts,
        equitable: false,
    };
    validate_defect_certificate(&f_n_s(n, s)?, r, &cert).map_err(ConstructionError::Certificate)?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::is_stable_pair;

    // Oracle: enumerate all pairs through the public stability predicate.
    fn oracle_fns(n: usize, s: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for x in 1..=n {
            for y in x + 1..=n {
                if !is_stable_pair(x, y, n, s).unwrap() {
                    out.push(vec![x, y]);
                }
            }
        }
        out
    }

    #[test]
    fn fns_examples() {
        let c5 = f_n_s(5, 2).unwrap();
        assert_eq!(c5.edges(), &[vec![1, 2], vec![1, 5], vec![2, 3], vec![3, 4], vec![4, 5]]);
        let k6m = f_n_s(6, 3).unwrap();
        assert_eq!(k6m.num_edges(), 12);
        for e in [[1, 4], [2, 5], [3, 6]] {
            assert!(!k6m.contains_edge(&e));
        }
        assert_eq!(f_n_s(9, 1).unwrap().num_edges(), 0);
        assert_eq!(f_n_s(11, 3).unwrap().num_edges(), 22);
        assert!(f_n_s(1, 2).is_err());
        for n in 2..=12 {
            for s in 1..=6 {
                assert_eq!(f_n_s(n, s).unwrap().edges(), oracle_fns(n, s).as_slice());
            }
        }
    }

    #[test]
    fn formula_examples() {
        assert_eq!(fns_chromatic_formula(11, 3).unwrap(), 4);
        assert_eq!(fns_chromatic_formula(11, 4).unwrap(), 6);
        for s in 2..=9 {
            assert_eq!(fns_chromatic_formula(2 * s, s).unwrap(), s);
        }
        assert!(fns_chromatic_formula(5, 3).is_err());
        assert!(fns_chromatic_formula(8, 1).is_err());
    }

    #[test]
    fn block_examples() {
        assert_eq!(
            block_coloring(11, 3).unwrap().colors(),
            &[1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3]
        );
        assert_eq!(block_coloring(6, 3).unwrap().colors(), &[1, 2, 3, 1, 2, 3]);
        assert_eq!(block_coloring(5, 2).unwrap().colors(), &[1, 2, 3, 1, 2]);
        assert!(block_coloring(5, 3).is_err());
    }

    #[test]
    fn residue_examples() {
        let w = residue_defect_witness(11, 4, 5).unwrap();
        assert_eq!(w.removed, vec![9, 10, 11]);
        assert_eq!(w.parts, vec![vec![1, 5], vec![2, 6], vec![3, 7], vec![4, 8], vec![]]);

        let w = residue_defect_witness(6, 2, 2).unwrap();
        assert_eq!(w.removed, vec![6]);
        assert_eq!(w.parts, vec![vec![1, 3, 5], vec![2, 4]]);

        let w = residue_defect_witness(4, 2, 2).unwrap();
        assert_eq!(w.removed, vec![4]);
        assert_eq!(w.parts, vec![vec![1, 3], vec![2]]);

        assert!(residue_defect_witness(6, 3, 2).is_err());
        assert!(residue_defect_witness(2, 3, 3).is_err());
    }
}
