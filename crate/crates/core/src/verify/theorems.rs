//! Registry of replayable results. Each entry rebuilds its construction,
//! computes the claimed quantities exactly and records every claim that
//! fails as a `failed:<claim>` flag.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::checks::finish;
use super::{ceil_div, sample_hypergraph, Limits, SamplerConfig, VerifyError, EXTRA_HYPOTHESIS};
use crate::constructions::{
    block_coloring, complete_uniform, directrs_graph, directrs_range, extend_coloring_to_almost_stable, f_n_s,
    fns_chromatic_formula, fns_independence_formula, freers1_graph, frick_gap_clique, frick_gap_graph,
    jafari_counterexample, jafari_within_hypothesis, residue_defect_witness,
};
use crate::hypercore::{
    augment_with_fns, stable_set_unchecked, stable_subhypergraph, Certificate, Hypergraph, Report, ReportBuilder,
    StabilityKind, Verdict,
};
use crate::solvers::{
    chromatic_number, colorability_defect, independence_number, is_r_colorable, kneser_chromatic_number,
    validate_coloring, ChromaticNumber, Defect, SolveError, MAX_VERTICES,
};

pub const THEOREM_IDS: [&str; 12] = [
    "trivial-example",
    "r-ge-s-nonexistence",
    "direct-rs",
    "inverse-rs",
    "freers1",
    "jafari-ce",
    "frick-gap",
    "restriction-lemma",
    "chi-fns",
    "alpha-fns",
    "gap-le-1",
    "finiteness",
];

/// Named integer parameters of a replay, e.g. `{"n": 11, "s": 3}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TheoremParams(pub BTreeMap<String, usize>);

impl TheoremParams {
    pub fn new() -> Self {
        TheoremParams::default()
    }

    pub fn with(mut self, key: &str, value: usize) -> Self {
        self.0.insert(key.to_owned(), value);
        self
    }

    pub fn get(&self, key: &str) -> Option<usize> {
        self.0.get(key).copied()
    }

    fn need(&self, key: &'static str) -> Result<usize, VerifyError> {
        self.get(key).ok_or(VerifyError::MissingParam(key))
    }

    fn or(&self, key: &str, default: usize) -> usize {
        self.get(key).unwrap_or(default)
    }
}

/// Replays the result registered under `id`.
pub fn verify_theorem(id: &str, params: &TheoremParams, limits: &Limits) -> Result<Report, VerifyError> {
    let run: fn(&TheoremParams, &Limits, &mut Replay) -> Result<(), VerifyError> = match id {
        "trivial-example" => trivial_example,
        "r-ge-s-nonexistence" => r_ge_s_nonexistence,
        "direct-rs" => direct_rs,
        "inverse-rs" => inverse_rs,
        "freers1" => freers1,
        "jafari-ce" => jafari_ce,
        "frick-gap" => frick_gap,
        "restriction-lemma" => restriction_lemma,
        "chi-fns" => chi_fns,
        "alpha-fns" => alpha_fns,
        "gap-le-1" => gap_le_1,
        "finiteness" => finiteness,
        other => return Err(VerifyError::UnknownTheorem(other.to_owned())),
    };
    let mut replay = Replay {
        b: ReportBuilder::new(id),
        failed: false,
    };
    let res = run(params, limits, &mut replay).map(|()| replay.verdict());
    finish(&replay.b, res)
}

struct Replay {
    b: ReportBuilder,
    failed: bool,
}

impl Replay {
    fn claim(&mut self, name: &str, holds: bool) {
        if !holds {
            self.failed = true;
            self.b.flag(format!("failed:{name}"));
        }
    }

    fn verdict(&self) -> Verdict {
        if self.failed {
            Verdict::Violated
        } else {
            Verdict::Holds
        }
    }

    fn params(&mut self, pairs: &[(&str, usize)]) {
        for &(k, v) in pairs {
            self.b.param(k, v);
        }
    }

    fn computed(&mut self, key: &str, value: usize) {
        self.b.computed(key, value);
    }

    fn defect(&mut self, label: &str, d: &Defect) {
        self.b.computed(label, d.value);
        self.b.certificate(Certificate::Defect {
            label: label.into(),
            certificate: d.certificate.clone(),
        });
    }

    /// Kneser χ of the `kind` part of `g` at arity `r`, with its coloring.
    fn kneser_part(
        &mut self,
        label: &str,
        g: &Hypergraph,
        kind: StabilityKind,
        r: usize,
        limits: &Limits,
    ) -> Result<usize, VerifyError> {
        let part = stable_subhypergraph(g, kind);
        let k = kneser_chromatic_number(&part, r, limits.deadline)?;
        self.b.computed(label, k.chi);
        self.b.certificate(Certificate::Kneser {
            label: label.into(),
            coloring: k.coloring,
        });
        Ok(k.chi)
    }
}

fn hypothesis(ok: bool, msg: impl FnOnce() -> String) -> Result<(), VerifyError> {
    if ok {
        Ok(())
    } else {
        Err(VerifyError::Hypothesis(msg()))
    }
}

fn fits(n: usize) -> Result<(), VerifyError> {
    hypothesis(n <= MAX_VERTICES, || format!("n = {n} exceeds the solver limit {MAX_VERTICES}"))
}

fn chi_of(g: &Hypergraph, limits: &Limits, r: &mut Replay, label: &str) -> Result<usize, VerifyError> {
    match chromatic_number(g, limits.deadline)? {
        ChromaticNumber::Colorable { chi, coloring } => {
            r.computed(label, chi);
            r.b.certificate(Certificate::Coloring {
                label: label.into(),
                coloring,
            });
            Ok(chi)
        }
        ChromaticNumber::Infeasible => Err(VerifyError::Hypothesis("graph has a singleton edge".into())),
    }
}

fn trivial_example(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (r, s) = (p.need("r")?, p.need("s")?);
    t.params(&[("r", r), ("s", s)]);
    hypothesis(r >= 2 && s >= 2, || format!("needs r, s >= 2, got r={r} s={s}"))?;
    let n = r * s - 1;
    fits(n)?;
    t.computed("n", n);
    let g = complete_uniform(n, r)?;
    let lhs = t.kneser_part("lhs", &g, StabilityKind::Stable(s), r, limits)?;
    t.claim("stable-part-empty", lhs == 0);
    let cd = colorability_defect(&g, s, false, limits.max_removal, limits.deadline)?;
    let ecd = colorability_defect(&g, s, true, limits.max_removal, limits.deadline)?;
    t.defect("cd", &cd);
    t.defect("ecd", &ecd);
    t.claim("cd-equals-s-minus-1", cd.value == s - 1);
    t.claim("ecd-equals-s-minus-1", ecd.value == s - 1);
    let rhs = ceil_div(ecd.value, r - 1);
    t.computed("rhs", rhs);
    t.claim("rhs-at-least-1", rhs >= 1 && rhs == ceil_div(s - 1, r - 1));
    Ok(())
}

fn r_ge_s_nonexistence(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (n, r, s) = (p.need("n")?, p.need("r")?, p.need("s")?);
    t.params(&[("n", n), ("r", r), ("s", s)]);
    hypothesis(r >= s && s >= 2 && n >= s.max(2), || {
        format!("needs r >= s >= 2 and n >= max(s, 2), got n={n} r={r} s={s}")
    })?;
    fits(n)?;
    let g = f_n_s(n, s)?;
    let lhs = t.kneser_part("lhs", &g, StabilityKind::Stable(s), r, limits)?;
    t.claim("stable-part-empty", lhs == 0);
    let witness = residue_defect_witness(n, s, r)?;
    t.computed("witness_removed", witness.removed.len());
    t.b.certificate(Certificate::Defect {
        label: "residue-witness".into(),
        certificate: witness,
    });
    let cd = colorability_defect(&g, r, false, limits.max_removal, limits.deadline)?;
    t.defect("cd", &cd);
    t.claim("cd-at-most-s-minus-1", cd.value < s);
    let rhs = ceil_div(cd.value, r - 1);
    t.computed("rhs", rhs);
    t.claim("rhs-at-most-1", rhs <= 1);
    Ok(())
}

fn direct_rs(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let s = p.need("s")?;
    hypothesis(s >= 4, || format!("needs s >= 4, got {s}"))?;
    let r = p.or("r", s + 1);
    t.params(&[("r", r), ("s", s)]);
    let range = directrs_range(s);
    hypothesis(range.contains(&r), || format!("needs r in {range:?}, got {r}"))?;
    let (g, _) = directrs_graph(s)?;
    let n = g.n();
    fits(n)?;
    t.computed("n", n);
    t.claim("n-at-least-2r-plus-1", n > 2 * r);
    let lhs = t.kneser_part("lhs", &g, StabilityKind::Stable(s), r, limits)?;
    t.claim("kneser-chi-zero", lhs == 0);
    let chi = chi_of(&g, limits, t, "chi")?;
    t.claim("chi-matches-formula", chi == (3 * s - 1).div_ceil(2));
    t.claim("chi-exceeds-r", chi > r);
    let cd = colorability_defect(&g, r, false, limits.max_removal, limits.deadline)?;
    t.defect("cd", &cd);
    let rhs = ceil_div(cd.value, r - 1);
    t.computed("rhs", rhs);
    t.claim("rhs-equals-1", rhs == 1);
    Ok(())
}

/// Checked on `F_n^s` for `2r <= n < s(s-1)`: every `n` where
/// `⌈cd^r/(r-1)⌉ = 1` must come with `r` inside the direct range.
fn inverse_rs(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (r, s) = (p.need("r")?, p.need("s")?);
    hypothesis(s >= 4 && r > s, || format!("needs s >= 4 and r >= s + 1, got r={r} s={s}"))?;
    let n_max = p.or("n_max", s * (s - 1) - 1);
    t.params(&[("r", r), ("s", s), ("n_max", n_max)]);
    let n_min = (2 * r).max(4);
    fits(n_max)?;
    let in_range = directrs_range(s).contains(&r);
    let mut witnesses = Vec::new();
    for n in n_min..=n_max {
        let g = f_n_s(n, s)?;
        t.claim("stable-part-empty", stable_subhypergraph(&g, StabilityKind::Stable(s)).num_edges() == 0);
        let cd = colorability_defect(&g, r, false, limits.max_removal, limits.deadline)?;
        if ceil_div(cd.value, r - 1) == 1 {
            witnesses.push(n);
            t.defect(&format!("cd-n{n}"), &cd);
        }
    }
    t.computed("n_checked", (n_min..=n_max).count());
    t.computed("witnesses", witnesses.len());
    t.b.certificate(Certificate::VertexSet {
        label: "witness-n".into(),
        vertices: witnesses.clone(),
    });
    t.claim("r-in-direct-range", witnesses.is_empty() || in_range);
    Ok(())
}

fn freers1(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (r, s, l) = (p.need("r")?, p.need("s")?, p.need("l")?);
    t.params(&[("r", r), ("s", s), ("l", l)]);
    hypothesis(r >= 2 && s >= 2 && l >= 2, || format!("needs r, s, l >= 2, got r={r} s={s} l={l}"))?;
    let g = freers1_graph(s, l)?;
    let n = g.n();
    fits(n)?;
    t.computed("n", n);
    t.claim("n-exceeds-l", n > l);
    let lhs = t.kneser_part("lhs", &g, StabilityKind::Stable(s), r, limits)?;
    t.claim("kneser-chi-zero", lhs == 0);
    let chi = chi_of(&g, limits, t, "chi")?;
    t.claim("chi-equals-s-plus-1", chi == s + 1);
    let cd = colorability_defect(&g, s, false, limits.max_removal, limits.deadline)?;
    t.defect("cd", &cd);
    let rhs = ceil_div(cd.value, r - 1);
    t.computed("rhs", rhs);
    t.claim("rhs-at-least-1", rhs >= 1);
    Ok(())
}

fn jafari_ce(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (r, s, l) = (p.need("r")?, p.need("s")?, p.need("l")?);
    t.params(&[("r", r), ("s", s), ("l", l)]);
    hypothesis(r >= 2 && s >= 2 && l >= 1, || format!("needs r, s >= 2 and l >= 1, got r={r} s={s} l={l}"))?;
    if !jafari_within_hypothesis(l) {
        t.b.flag(EXTRA_HYPOTHESIS);
    }
    let g = jafari_counterexample(r, s, l)?;
    let n = g.n();
    fits(n)?;
    t.computed("n", n);
    t.claim("n-exceeds-l", n > l);
    let lhs = t.kneser_part("lhs", &g, StabilityKind::Stable(s), r, limits)?;
    t.claim("kneser-chi-one", lhs == 1);
    let cd = colorability_defect(&g, s, false, limits.max_removal, limits.deadline)?;
    t.defect("cd", &cd);
    t.claim("cd-at-least-r", cd.value >= r);
    let ecd = colorability_defect(&g, s, true, limits.max_removal, limits.deadline)?;
    t.defect("ecd", &ecd);
    t.claim("ecd-at-least-cd", ecd.value >= cd.value);
    let rhs = ceil_div(cd.value, r - 1);
    t.computed("rhs", rhs);
    t.claim("rhs-at-least-2", rhs >= 2);
    Ok(())
}

fn frick_gap(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (r, l) = (p.need("r")?, p.need("l")?);
    t.params(&[("r", r), ("l", l)]);
    hypothesis(r >= 2 && l >= 1, || format!("needs r >= 2 and l >= 1, got r={r} l={l}"))?;
    let g = frick_gap_graph(r, l)?;
    let n = g.n();
    fits(n)?;
    t.computed("n", n);
    let clique = frick_gap_clique(r, l);
    let is_clique = clique
        .iter()
        .enumerate()
        .all(|(i, &a)| clique[i + 1..].iter().all(|&b| g.contains_edge(&[a, b])));
    t.claim("clique-present", is_clique && clique.len() == 2 * r - 1);
    t.b.certificate(Certificate::VertexSet {
        label: "clique".into(),
        vertices: clique,
    });
    let lhs = t.kneser_part("lhs", &g, StabilityKind::Stable(r), r, limits)?;
    t.claim("kneser-chi-one", lhs == 1);
    let cd = colorability_defect(&g, r, false, limits.max_removal, limits.deadline)?;
    t.defect("cd", &cd);
    t.claim("cd-at-least-r", cd.value >= r);
    let rhs = ceil_div(cd.value, r - 1);
    t.computed("rhs", rhs);
    t.claim("rhs-at-least-2", rhs >= 2);
    Ok(())
}

/// For sampled `H` on `[n]` with no `s`-stable edges:
/// `cd^r(H ∪ F_n^s) = cd^r(F_n^s)` and `cd^r(H) <= cd^r(F_n^s)`.
fn restriction_lemma(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (n, r, s) = (p.need("n")?, p.need("r")?, p.need("s")?);
    let samples = p.or("samples", 50);
    let seed = p.or("seed", 0);
    let cfg = SamplerConfig {
        n_min: n,
        n_max: n,
        max_edges: p.or("max_edges", 8),
        max_edge_size: p.or("max_edge_size", 3),
    };
    t.params(&[("n", n), ("r", r), ("s", s), ("samples", samples), ("seed", seed)]);
    hypothesis(n >= 2 && r >= 2 && s >= 1, || format!("needs n, r >= 2 and s >= 1, got n={n} r={r} s={s}"))?;
    fits(n)?;
    let fns = f_n_s(n, s)?;
    let base = colorability_defect(&fns, r, false, limits.max_removal, limits.deadline)?;
    t.defect("cd_fns", &base);
    let mut mismatches = Vec::new();
    for i in 0..samples {
        let h = restricted_sample(seed as u64, i as u64, &cfg, s);
        let aug = augment_with_fns(&h, s)?;
        let cd_aug = colorability_defect(&aug, r, false, limits.max_removal, limits.deadline)?;
        let cd_h = colorability_defect(&h, r, false, limits.max_removal, limits.deadline)?;
        if cd_aug.value != base.value || cd_h.value > base.value {
            if mismatches.is_empty() {
                t.defect("cd_augmented", &cd_aug);
            }
            mismatches.push(i);
        }
    }
    t.computed("mismatches", mismatches.len());
    if let Some(&first) = mismatches.first() {
        t.computed("first_mismatch", first);
    }
    t.claim("cd-equality", mismatches.is_empty());
    Ok(())
}

/// Sample `index` with every `s`-stable edge dropped.
pub(crate) fn restricted_sample(seed: u64, index: u64, cfg: &SamplerConfig, s: usize) -> Hypergraph {
    let h = sample_hypergraph(seed, index, cfg);
    let n = h.n();
    h.filter_edges(|e| !stable_set_unchecked(e, n, StabilityKind::Stable(s)))
}

fn chi_fns(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (n, s) = (p.need("n")?, p.need("s")?);
    t.params(&[("n", n), ("s", s)]);
    let formula = fns_chromatic_formula(n, s).map_err(|e| VerifyError::Hypothesis(e.to_string()))?;
    fits(n)?;
    t.computed("formula", formula);
    let g = f_n_s(n, s)?;
    let chi = chi_of(&g, limits, t, "chi")?;
    t.claim("chi-equals-formula", chi == formula);
    let block = block_coloring(n, s)?;
    t.claim("block-coloring-proper", validate_coloring(&g, &block).is_ok());
    t.claim("block-coloring-size", block.num_colors() == formula);
    t.b.certificate(Certificate::Coloring {
        label: "block".into(),
        coloring: block,
    });
    Ok(())
}

fn alpha_fns(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (n, s) = (p.need("n")?, p.need("s")?);
    t.params(&[("n", n), ("s", s)]);
    let formula = fns_independence_formula(n, s).map_err(|e| VerifyError::Hypothesis(e.to_string()))?;
    fits(n)?;
    t.computed("formula", formula);
    let g = f_n_s(n, s)?;
    let best = independence_number(&g, limits.deadline)?;
    t.computed("alpha", best.size);
    t.b.certificate(Certificate::VertexSet {
        label: "solver".into(),
        vertices: best.vertices,
    });
    t.claim("alpha-equals-formula", best.size == formula);
    let multiples: Vec<usize> = (1..=formula).map(|i| i * s).collect();
    let independent = g.edges().iter().all(|e| !(multiples.contains(&e[0]) && multiples.contains(&e[1])));
    t.claim("multiples-independent", independent);
    t.b.certificate(Certificate::VertexSet {
        label: "multiples-of-s".into(),
        vertices: multiples,
    });
    Ok(())
}

/// Over sampled hypergraphs with `r >= s`: the almost-stable part needs at
/// most one Kneser class more than the stable part, and the one-class
/// extension validates.
fn gap_le_1(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (r, s) = (p.need("r")?, p.need("s")?);
    let samples = p.or("samples", 100);
    let seed = p.or("seed", 0);
    let cfg = SamplerConfig {
        n_min: p.or("n_min", 4),
        n_max: p.or("n_max", 7),
        max_edges: p.or("max_edges", 8),
        max_edge_size: p.or("max_edge_size", 3),
    };
    t.params(&[("r", r), ("s", s), ("samples", samples), ("seed", seed), ("n_max", cfg.n_max)]);
    hypothesis(r >= s && s >= 2, || format!("needs r >= s >= 2, got r={r} s={s}"))?;
    hypothesis(2 <= cfg.n_min && cfg.n_min <= cfg.n_max, || "needs 2 <= n_min <= n_max".into())?;
    fits(cfg.n_max)?;
    let mut max_gap = 0;
    let mut bad = Vec::new();
    for i in 0..samples {
        let g = sample_hypergraph(seed as u64, i as u64, &cfg);
        let stable = stable_subhypergraph(&g, StabilityKind::Stable(s));
        let almost = stable_subhypergraph(&g, StabilityKind::AlmostStable(s));
        let base = kneser_chromatic_number(&stable, r, limits.deadline)?;
        let top = kneser_chromatic_number(&almost, r, limits.deadline)?;
        let gap = top.chi.checked_sub(base.chi);
        let ext = extend_coloring_to_almost_stable(&g, r, s, &base.coloring, limits.deadline);
        let ext_ok = matches!(&ext, Ok(k) if k.num_classes() <= base.chi + 1);
        if let Err(crate::constructions::ConstructionError::Solve(SolveError::Timeout)) = ext {
            return Err(SolveError::Timeout.into());
        }
        match gap {
            Some(d) if d <= 1 && ext_ok => max_gap = max_gap.max(d),
            _ => {
                if bad.is_empty() {
                    t.b.certificate(Certificate::Kneser {
                        label: format!("stable-part-sample{i}"),
                        coloring: base.coloring,
                    });
                    t.b.certificate(Certificate::Kneser {
                        label: format!("almost-part-sample{i}"),
                        coloring: top.coloring,
                    });
                }
                bad.push(i);
            }
        }
    }
    t.computed("max_gap", max_gap);
    t.computed("failures", bad.len());
    t.claim("gap-at-most-1", bad.is_empty());
    Ok(())
}

/// For `n >= s(s-1)` and `s+1 <= r <= ⌈(3s-3)/2⌉`, `F_n^s` is `r`-colorable.
fn finiteness(p: &TheoremParams, limits: &Limits, t: &mut Replay) -> Result<(), VerifyError> {
    let (r, s) = (p.need("r")?, p.need("s")?);
    hypothesis(s >= 4 && r > s && r <= (3 * s - 3).div_ceil(2), || {
        format!("needs s >= 4 and s+1 <= r <= ceil((3s-3)/2), got r={r} s={s}")
    })?;
    let n_min = s * (s - 1);
    let n_max = p.or("n_max", n_min + s);
    t.params(&[("r", r), ("s", s), ("n_max", n_max)]);
    fits(n_max)?;
    let mut bad = Vec::new();
    for n in n_min..=n_max {
        let g = f_n_s(n, s)?;
        let formula_ok = fns_chromatic_formula(n, s)? <= r;
        match is_r_colorable(&g, r, false, limits.deadline)? {
            Some(cert) if formula_ok => {
                if n == n_min {
                    t.b.certificate(Certificate::Defect {
                        label: format!("colorable-n{n}"),
                        certificate: cert,
                    });
                }
            }
            _ => {
                t.b.certificate(Certificate::Coloring {
                    label: format!("block-n{n}"),
                    coloring: block_coloring(n, s)?,
                });
                bad.push(n);
            }
        }
    }
    t.computed("n_checked", (n_min..=n_max).count());
    t.computed("failures", bad.len());
    t.claim("cd-zero-beyond-s(s-1)", bad.is_empty());
    Ok(())
}
