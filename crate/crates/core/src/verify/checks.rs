use super::{ceil_div, Conjecture, ConjectureId, Limits, VerifyError, EXTRA_HYPOTHESIS};
use crate::hypercore::{
    kneser_hypergraph, stable_subhypergraph, Certificate, Hypergraph, HypergraphError, Report, ReportBuilder,
    StabilityKind, Verdict,
};
use crate::solvers::{
    chromatic_number, colorability_defect, kneser_chromatic_number, validate_defect_certificate,
    validate_kneser_coloring, SolveError,
};

/// `χ(KG^r(G_{r-stable})) >= ⌈cd^r(G)/(r-1)⌉`.
pub fn check_frick(g: &Hypergraph, r: usize, limits: &Limits) -> Result<Report, VerifyError> {
    check_conjecture(g, ConjectureId::frick(r), limits)
}

/// `χ(KG^r(G_{s-stable})) >= ⌈ecd^s(G)/(r-1)⌉`.
pub fn check_jafari(g: &Hypergraph, r: usize, s: usize, limits: &Limits) -> Result<Report, VerifyError> {
    check_conjecture(g, ConjectureId::jafari(r, s), limits)
}

/// `χ(KG^r(G_{almost s-stable})) >= ⌈cd^r(G)/(r-1)⌉`. A violation is
/// re-derived on the explicit Kneser hypergraph before it is reported.
pub fn check_almost(g: &Hypergraph, r: usize, s: usize, limits: &Limits) -> Result<Report, VerifyError> {
    check_conjecture(g, ConjectureId::almost(r, s), limits)
}

/// Runs one conjecture on `g`. Timeouts become a `Timeout` verdict holding
/// whatever was computed before the deadline.
pub fn check_conjecture(g: &Hypergraph, id: ConjectureId, limits: &Limits) -> Result<Report, VerifyError> {
    let ConjectureId { conjecture, r, s } = id;
    if r < 2 || s < 1 {
        return Err(VerifyError::Hypothesis(format!("checks need r >= 2 and s >= 1, got r={r} s={s}")));
    }
    let mut b = ReportBuilder::new(conjecture.name());
    b.param("n", g.n()).param("edges", g.num_edges()).param("r", r).param("s", s);
    if !id.within_hypothesis(g.n()) {
        b.flag(EXTRA_HYPOTHESIS);
    }
    let res = evaluate(g, id, limits, &mut b);
    finish(&b, res)
}

pub(crate) fn finish(b: &ReportBuilder, res: Result<Verdict, VerifyError>) -> Result<Report, VerifyError> {
    match res {
        Ok(verdict) => Ok(b.finish(verdict)),
        Err(VerifyError::Solve(SolveError::Timeout)) => Ok(b.finish(Verdict::Timeout)),
        Err(e) => Err(e),
    }
}

fn evaluate(g: &Hypergraph, id: ConjectureId, limits: &Limits, b: &mut ReportBuilder) -> Result<Verdict, VerifyError> {
    let ConjectureId { conjecture, r, s } = id;
    let (kind, part_label) = match conjecture {
        Conjecture::Almost => (StabilityKind::AlmostStable(s), "almost-stable-part"),
        _ => (StabilityKind::Stable(s), "stable-part"),
    };
    let part = stable_subhypergraph(g, kind);
    b.computed("part_edges", part.num_edges());
    let kneser = kneser_chromatic_number(&part, r, limits.deadline)?;
    b.computed("lhs", kneser.chi);
    b.certificate(Certificate::Kneser {
        label: part_label.into(),
        coloring: kneser.coloring.clone(),
    });

    let (arity, equitable, label) = match conjecture {
        Conjecture::Jafari => (s, true, "ecd"),
        _ => (r, false, "cd"),
    };
    let defect = colorability_defect(g, arity, equitable, limits.max_removal, limits.deadline)?;
    let rhs = ceil_div(defect.value, r - 1);
    b.computed(label, defect.value).computed("rhs", rhs);
    b.certificate(Certificate::Defect {
        label: label.into(),
        certificate: defect.certificate.clone(),
    });
    if kneser.chi >= rhs {
        return Ok(Verdict::Holds);
    }

    validate_kneser_coloring(&part, r, &kneser.coloring)
        .map_err(|e| VerifyError::OracleMismatch(format!("Kneser certificate: {e}")))?;
    validate_defect_certificate(g, arity, &defect.certificate)
        .map_err(|e| VerifyError::OracleMismatch(format!("defect certificate: {e}")))?;
    if conjecture == Conjecture::Almost {
        match kneser_hypergraph(&part, r, limits.kneser_cap) {
            Ok(kg) => {
                let chi = chromatic_number(&kg, limits.deadline)?.value();
                if chi != Some(kneser.chi) {
                    return Err(VerifyError::OracleMismatch(format!(
                        "Kneser χ {} but explicit oracle gives {chi:?}",
                        kneser.chi
                    )));
                }
                b.flag("oracle-confirmed");
            }
            Err(HypergraphError::TooLargeForKneser { .. }) => {
                b.flag("oracle-skipped");
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Verdict::Violated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_uniform, f_n_s, frick_gap_graph, jafari_counterexample};

    fn lim() -> Limits {
        Limits::default()
    }

    fn get(r: &Report, key: &str) -> i64 {
        r.computed[key]
    }

    #[test]
    fn frick_examples() {
        let rep = check_frick(&complete_uniform(8, 3).unwrap(), 3, &lim()).unwrap();
        assert_eq!(rep.verdict, Verdict::Violated);
        assert_eq!((get(&rep, "lhs"), get(&rep, "rhs"), get(&rep, "cd")), (0, 1, 2));

        let rep = check_frick(&Hypergraph::edgeless(6), 3, &lim()).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!((get(&rep, "lhs"), get(&rep, "rhs")), (0, 0));
        assert!(rep.flags.is_empty());

        let rep = check_frick(&f_n_s(5, 2).unwrap(), 2, &lim()).unwrap();
        assert!(rep.flags.contains(&EXTRA_HYPOTHESIS.to_string()));
    }

    #[test]
    fn frick_gap_example() {
        let rep = check_frick(&frick_gap_graph(3, 1).unwrap(), 3, &lim()).unwrap();
        assert_eq!(rep.verdict, Verdict::Violated);
        assert_eq!(get(&rep, "lhs"), 1);
        assert!(get(&rep, "rhs") >= 2);
    }

    #[test]
    fn jafari_examples() {
        let rep = check_jafari(&jafari_counterexample(2, 2, 1).unwrap(), 2, 2, &lim()).unwrap();
        assert_eq!(rep.verdict, Verdict::Violated);
        assert_eq!((get(&rep, "lhs"), get(&rep, "rhs"), get(&rep, "ecd")), (1, 2, 2));

        let rep = check_jafari(&complete_uniform(5, 2).unwrap(), 2, 3, &lim()).unwrap();
        assert_eq!(rep.verdict, Verdict::Violated);
        assert_eq!(get(&rep, "lhs"), 0);
        assert!(get(&rep, "rhs") >= 1);
        assert!(rep.flags.is_empty());

        let rep = check_jafari(&Hypergraph::edgeless(5), 3, 2, &lim()).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.flags, vec![EXTRA_HYPOTHESIS.to_string()]);
    }

    #[test]
    fn almost_examples() {
        let rep = check_almost(&f_n_s(7, 2).unwrap(), 2, 2, &lim()).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);

        let rep = check_almost(&complete_uniform(8, 3).unwrap(), 3, 3, &lim()).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!(get(&rep, "lhs") >= 1);

        let rep = check_almost(&Hypergraph::edgeless(6), 3, 2, &lim()).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn violated_reports_round_trip() {
        let rep = check_frick(&complete_uniform(8, 3).unwrap(), 3, &lim()).unwrap();
        let back: Report = serde_json::from_str(&rep.to_json_line()).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn expired_deadline_gives_timeout() {
        let limits = Limits {
            deadline: crate::solvers::Deadline::at(std::time::Instant::now()),
            ..Limits::default()
        };
        let rep = check_frick(&frick_gap_graph(3, 1).unwrap(), 3, &limits);
        // tiny instances may finish before the first deadline poll
        if let Ok(rep) = rep {
            assert!(matches!(rep.verdict, Verdict::Timeout | Verdict::Violated));
        }
    }

    #[test]
    fn rejects_bad_arity() {
        assert!(check_frick(&Hypergraph::edgeless(4), 1, &lim()).is_err());
    }
}
