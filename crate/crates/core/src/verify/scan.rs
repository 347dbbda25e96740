use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::{check_conjecture, sample_hypergraph, Conjecture, ConjectureId, Limits, SamplerConfig, VerifyError};
use crate::constructions::Family;
use crate::hypercore::{Hypergraph, Report, ReportBuilder, Verdict, DEFAULT_KNESER_CAP};
use crate::par::{map_ordered, Execution};
use crate::solvers::{Deadline, SolveError, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum ScanMode {
    /// `F_n^s` for every `n` in range (the restriction lemma makes these the
    /// extremal instances when the stable part is empty).
    ExhaustiveFns,
    /// The named constructions over the `r`, `s` and `l` ranges.
    NamedFamilies,
    RandomHypergraphs {
        samples: usize,
        seed: u64,
        max_edges: usize,
        max_edge_size: usize,
    },
}

#[derive(Clone, Debug)]
pub struct ScanSpec {
    pub conjecture: Conjecture,
    pub mode: ScanMode,
    pub n_range: RangeInclusive<usize>,
    pub r_range: RangeInclusive<usize>,
    /// Ignored for Frick's conjecture, where `s = r`.
    pub s_range: RangeInclusive<usize>,
    pub l_range: RangeInclusive<usize>,
    /// Per-instance wall-clock limit.
    pub time_limit: Option<Duration>,
    pub max_removal: Option<usize>,
    pub kneser_cap: usize,
    /// Largest `n` accepted in exhaustive mode.
    pub exhaustive_cap: usize,
    pub execution: Execution,
    pub jobs: Option<usize>,
}

impl ScanSpec {
    pub const DEFAULT_EXHAUSTIVE_CAP: usize = 14;

    pub fn new(conjecture: Conjecture, mode: ScanMode) -> Self {
        ScanSpec {
            conjecture,
            mode,
            n_range: 4..=10,
            r_range: 2..=3,
            s_range: 2..=3,
            l_range: 1..=2,
            time_limit: None,
            max_removal: None,
            kneser_cap: DEFAULT_KNESER_CAP,
            exhaustive_cap: Self::DEFAULT_EXHAUSTIVE_CAP,
            execution: Execution::default(),
            jobs: None,
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |msg: String| Err(VerifyError::InvalidScan(msg));
        for (name, range) in [
            ("n", &self.n_range),
            ("r", &self.r_range),
            ("s", &self.s_range),
            ("l", &self.l_range),
        ] {
            if range.is_empty() {
                return bad(format!("{name} range {range:?} is empty"));
            }
        }
        if *self.n_range.start() < 2 {
            return bad("n must be at least 2".into());
        }
        if *self.r_range.start() < 2 {
            return bad("r must be at least 2".into());
        }
        if *self.s_range.start() < 1 {
            return bad("s must be at least 1".into());
        }
        match self.mode {
            ScanMode::ExhaustiveFns if *self.n_range.end() > self.exhaustive_cap => bad(format!(
                "exhaustive mode caps n at {}, got {}",
                self.exhaustive_cap,
                self.n_range.end()
            )),
            ScanMode::RandomHypergraphs {
                samples,
                max_edges,
                max_edge_size,
                ..
            } if samples == 0 || max_edges == 0 || max_edge_size < 2 => {
                bad("random mode needs samples >= 1, max_edges >= 1 and max_edge_size >= 2".into())
            }
            _ if *self.n_range.end() > MAX_VERTICES => {
                bad(format!("n is capped at {MAX_VERTICES}"))
            }
            _ => Ok(()),
        }
    }

    fn arities(&self) -> Vec<(usize, usize)> {
        match self.conjecture {
            Conjecture::Frick => self.r_range.clone().map(|r| (r, r)).collect(),
            _ => self
                .r_range
                .clone()
                .flat_map(|r| self.s_range.clone().map(move |s| (r, s)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    /// Subjects of all violated reports, in report order.
    pub violations: Vec<String>,
    pub instances: usize,
    pub holds: usize,
    pub violated: usize,
    pub timeouts: usize,
    /// Family instances dropped because they exceed the solver size limit.
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOutput {
    pub reports: Vec<Report>,
    pub summary: ScanSummary,
}

impl ScanOutput {
    /// One JSON report per line, in scan order.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.to_json_line());
            out.push('\n');
        }
        out
    }

    pub fn any_violated(&self) -> bool {
        self.summary.violated > 0
    }
}

struct Instance {
    subject: String,
    graph: Hypergraph,
    id: ConjectureId,
    extra: Vec<(&'static str, usize)>,
}

/// Runs the conjecture checker on every instance. Instances are independent and
/// may run in parallel; reports come back in instance order, so the output
/// depends only on the spec.
pub fn scan(spec: &ScanSpec) -> Result<ScanOutput, VerifyError> {
    spec.validate()?;
    let (instances, skipped) = instances(spec);
    let results = map_ordered(spec.execution, spec.jobs, instances, |inst| run_instance(spec, inst));
    let reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let mut summary = ScanSummary {
        instances: reports.len(),
        skipped,
        ..ScanSummary::default()
    };
    for r in &reports {
        match r.verdict {
            Verdict::Holds => summary.holds += 1,
            Verdict::Violated => {
                summary.violated += 1;
                summary.violations.push(r.subject.clone());
            }
            Verdict::Timeout => summary.timeouts += 1,
            Verdict::Infeasible => {}
        }
    }
    Ok(ScanOutput { reports, summary })
}

fn run_instance(spec: &ScanSpec, inst: Instance) -> Result<Report, VerifyError> {
    let limits = Limits {
        deadline: spec.time_limit.map_or(Deadline::none(), Deadline::after),
        max_removal: spec.max_removal,
        kneser_cap: spec.kneser_cap,
    };
    let mut report = match check_conjecture(&inst.graph, inst.id, &limits) {
        Ok(report) => report,
        Err(VerifyError::Solve(SolveError::CapExceeded { .. })) => {
            let mut b = ReportBuilder::new(inst.id.conjecture.name());
            b.param("n", inst.graph.n())
                .param("edges", inst.graph.num_edges())
                .param("r", inst.id.r)
                .param("s", inst.id.s)
                .flag("removal-cap-exceeded");
            b.finish(Verdict::Timeout)
        }
        Err(e) => return Err(e),
    };
    report.subject = inst.subject;
    for (k, v) in inst.extra {
        report.parameters.insert(k.to_owned(), v as i64);
    }
    Ok(report)
}

fn instances(spec: &ScanSpec) -> (Vec<Instance>, usize) {
    let conj = spec.conjecture;
    let arities = spec.arities();
    let mut out = Vec::new();
    let mut skipped = 0;
    let mut seen = BTreeSet::new();
    let mut push_family = |out: &mut Vec<Instance>, family: Family, (r, s): (usize, usize), l: Option<usize>| {
        let id = ConjectureId { conjecture: conj, r, s };
        if !seen.insert((family.id(), r, s)) {
            return;
        }
        let Ok(graph) = family.build() else {
            return;
        };
        if graph.n() > MAX_VERTICES {
            skipped += 1;
            return;
        }
        out.push(Instance {
            subject: format!("{conj} {} r={r} s={s}", family.id()),
            graph,
            id,
            extra: l.map(|l| vec![("l", l)]).unwrap_or_default(),
        });
    };

    match spec.mode {
        ScanMode::ExhaustiveFns => {
            for n in spec.n_range.clone() {
                for &(r, s) in &arities {
                    push_family(&mut out, Family::Fns { n, s }, (r, s), None);
                }
            }
        }
        ScanMode::NamedFamilies => {
            for &(r, s) in &arities {
                for l in spec.l_range.clone() {
                    match conj {
                        Conjecture::Jafari => push_family(&mut out, Family::JafariCe { r, s, l }, (r, s), Some(l)),
                        Conjecture::Frick => push_family(&mut out, Family::FrickGap { r, l }, (r, s), Some(l)),
                        Conjecture::Almost => {
                            for family in [
                                Family::Trivial { r, s },
                                Family::DirectRs { s },
                                Family::Freers1 { s, l },
                                Family::JafariCe { r, s, l },
                                Family::FrickGap { r, l },
                            ] {
                                push_family(&mut out, family, (r, s), Some(l));
                            }
                        }
                    }
                }
                if conj == Conjecture::Almost {
                    for n in spec.n_range.clone() {
                        push_family(&mut out, Family::Fns { n, s }, (r, s), None);
                    }
                }
            }
        }
        ScanMode::RandomHypergraphs {
            samples,
            seed,
            max_edges,
            max_edge_size,
        } => {
            let cfg = SamplerConfig {
                n_min: *spec.n_range.start(),
                n_max: *spec.n_range.end(),
                max_edges,
                max_edge_size,
            };
            for i in 0..samples {
                let graph = sample_hypergraph(seed, i as u64, &cfg);
                for &(r, s) in &arities {
                    out.push(Instance {
                        subject: format!("{conj} random(seed={seed},i={i}) r={r} s={s}"),
                        graph: graph.clone(),
                        id: ConjectureId { conjecture: conj, r, s },
                        extra: vec![("sample", i)],
                    });
                }
            }
        }
    }
    (out, skipped)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jafari_named_families() {
        let mut spec = ScanSpec::new(Conjecture::Jafari, ScanMode::NamedFamilies);
        spec.r_range = 2..=2;
        spec.s_range = 2..=2;
        spec.l_range = 1..=2;
        let out = scan(&spec).unwrap();
        assert_eq!(out.reports.len(), 2);
        assert_eq!(out.summary.violated, 2);
        assert_eq!(out.summary.violations[0], "jafari jafari-ce(r=2,s=2,l=1) r=2 s=2");
    }

    #[test]
    fn frick_exhaustive_matches_defect() {
        let mut spec = ScanSpec::new(Conjecture::Frick, ScanMode::ExhaustiveFns);
        spec.n_range = 3..=9;
        spec.r_range = 3..=3;
        let out = scan(&spec).unwrap();
        assert_eq!(out.reports.len(), 7);
        for r in &out.reports {
            assert_eq!(r.computed["lhs"], 0);
            assert_eq!(r.is_violated(), r.computed["cd"] > 0, "{}", r.subject);
        }
        let violated: Vec<i64> = out
            .reports
            .iter()
            .filter(|r| r.is_violated())
            .map(|r| r.parameters["n"])
            .collect();
        assert_eq!(violated, vec![4, 5, 7, 8]);
    }

    #[test]
    fn random_scan_is_deterministic_across_execution_modes() {
        let mode = ScanMode::RandomHypergraphs {
            samples: 30,
            seed: 7,
            max_edges: 6,
            max_edge_size: 3,
        };
        let mut spec = ScanSpec::new(Conjecture::Almost, mode);
        spec.n_range = 4..=7;
        spec.r_range = 2..=2;
        spec.s_range = 2..=2;
        let par = scan(&spec).unwrap();
        spec.execution = Execution::Sequential;
        let seq = scan(&spec).unwrap();
        assert_eq!(par.to_jsonl(), seq.to_jsonl());
        assert_eq!(par.summary.violated, 0);
        assert_eq!(par.reports.len(), 30);
    }

    #[test]
    fn almost_named_families_dedupe() {
        let mut spec = ScanSpec::new(Conjecture::Almost, ScanMode::NamedFamilies);
        spec.r_range = 2..=2;
        spec.s_range = 2..=2;
        spec.l_range = 1..=1;
        spec.n_range = 4..=6;
        let out = scan(&spec).unwrap();
        let subjects: BTreeSet<_> = out.reports.iter().map(|r| r.subject.clone()).collect();
        assert_eq!(subjects.len(), out.reports.len());
        // trivial, jafari-ce, frick-gap (freers1 and direct-rs are out of range at l=1, s=2) and 3 F_n^s
        assert_eq!(out.reports.len(), 6);
    }

    #[test]
    fn invalid_specs() {
        let mut spec = ScanSpec::new(Conjecture::Frick, ScanMode::ExhaustiveFns);
        spec.n_range = 4..=15;
        assert!(scan(&spec).is_err());
        #[allow(clippy::reversed_empty_ranges)]
        {
            spec.n_range = 5..=4;
        }
        assert!(scan(&spec).is_err());
        let spec = ScanSpec::new(
            Conjecture::Frick,
            ScanMode::RandomHypergraphs {
                samples: 0,
                seed: 1,
                max_edges: 3,
                max_edge_size: 3,
            },
        );
        assert!(scan(&spec).is_err());
    }
}
