use super::ConstructionError;
use crate::hypercore::{stable_subhypergraph, Edge, Hypergraph, StabilityKind};
use crate::solvers::{validate_kneser_coloring, Deadline, KneserColoring};

/// Extends a Kneser coloring of the `s`-stable part of `g` to the almost
/// `s`-stable part by putting every new edge into one fresh class.
///
/// With `r >= s` each new edge meets `{1, …, s-1}`, so no `r` of them are
/// pairwise disjoint; the result is re-validated regardless.
pub fn extend_coloring_to_almost_stable(
    g: &Hypergraph,
    r: usize,
    s: usize,
    base: &KneserColoring,
    deadline: Deadline,
) -> Result<KneserColoring, ConstructionError> {
    if r < s {
        return Err(ConstructionError::OutOfRange(format!("extension needs r >= s, got r={r} s={s}")));
    }
    let stable = stable_subhypergraph(g, StabilityKind::Stable(s));
    validate_kneser_coloring(&stable, r, base).map_err(ConstructionError::InvalidBase)?;

    let almost = stable_subhypergraph(g, StabilityKind::AlmostStable(s));
    let fresh: Vec<Edge> = almost
        .edges()
        .iter()
        .filter(|e| !stable.contains_edge(e))
        .cloned()
        .collect();
    if fresh.is_empty() {
        return Ok(base.clone());
    }
    let mut classes = base.classes.clone();
    classes.push(fresh);
    let extended = KneserColoring::from_classes(r, classes, deadline)?;
    validate_kneser_coloring(&almost, r, &extended).map_err(ConstructionError::Certificate)?;
    Ok(extended)
}
