use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Coloring;
use crate::solvers::{DefectCertificate, KneserColoring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
    Infeasible,
    Timeout,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Infeasible => "infeasible",
            Verdict::Timeout => "timeout",
        })
    }
}

/// A serialized witness attached to a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Defect {
        label: String,
        certificate: DefectCertificate,
    },
    Kneser {
        label: String,
        coloring: KneserColoring,
    },
    Coloring {
        label: String,
        coloring: Coloring,
    },
    VertexSet {
        label: String,
        vertices: Vec<usize>,
    },
}

/// Verdict of a conjecture check or theorem replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawReport")]
pub struct Report {
    pub subject: String,
    pub parameters: BTreeMap<String, i64>,
    pub computed: BTreeMap<String, i64>,
    pub certificates: Vec<Certificate>,
    /// Free-form labels such as `extra-hypothesis`.
    pub flags: Vec<String>,
    pub verdict: Verdict,
}

#[derive(Deserialize)]
struct RawReport {
    subject: String,
    parameters: BTreeMap<String, i64>,
    computed: BTreeMap<String, i64>,
    certificates: Vec<Certificate>,
    flags: Vec<String>,
    verdict: Verdict,
}

impl TryFrom<RawReport> for Report {
    type Error = String;

    fn try_from(raw: RawReport) -> Result<Self, Self::Error> {
        if raw.verdict == Verdict::Violated && raw.certificates.is_empty() {
            return Err("violated report without certificates".into());
        }
        Ok(Report {
            subject: raw.subject,
            parameters: raw.parameters,
            computed: raw.computed,
            certificates: raw.certificates,
            flags: raw.flags,
            verdict: raw.verdict,
        })
    }
}

/// Accumulates a [`Report`]; [`ReportBuilder::finish`] enforces that a
/// violated verdict carries at least one certificate.
#[derive(Clone, Debug)]
pub struct ReportBuilder {
    report: Report,
}

impl ReportBuilder {
    pub fn new(subject: impl Into<String>) -> Self {
        ReportBuilder {
            report: Report {
                subject: subject.into(),
                parameters: BTreeMap::new(),
                computed: BTreeMap::new(),
                certificates: Vec::new(),
                flags: Vec::new(),
                verdict: Verdict::Holds,
            },
        }
    }

    pub fn param(&mut self, name: &str, value: impl TryInto<i64>) -> &mut Self {
        self.report
            .parameters
            .insert(name.to_owned(), value.try_into().unwrap_or(i64::MAX));
        self
    }

    pub fn computed(&mut self, name: &str, value: impl TryInto<i64>) -> &mut Self {
        self.report
            .computed
            .insert(name.to_owned(), value.try_into().unwrap_or(i64::MAX));
        self
    }

    pub fn certificate(&mut self, cert: Certificate) -> &mut Self {
        self.report.certificates.push(cert);
        self
    }

    pub fn flag(&mut self, flag: impl Into<String>) -> &mut Self {
        let flag = flag.into();
        if !self.report.flags.contains(&flag) {
            self.report.flags.push(flag);
        }
        self
    }

    pub fn get_computed(&self, name: &str) -> Option<i64> {
        self.report.computed.get(name).copied()
    }

    pub fn finish(&self, verdict: Verdict) -> Report {
        assert!(
            verdict != Verdict::Violated || !self.report.certificates.is_empty(),
            "violated report for {} has no certificate",
            self.report.subject
        );
        let mut report = self.report.clone();
        report.verdict = verdict;
        report
    }
}

impl Report {
    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[should_panic(expected = "no certificate")]
    fn violated_needs_certificate() {
        ReportBuilder::new("x").finish(Verdict::Violated);
    }

    #[test]
    fn json_line_round_trip() {
        let mut b = ReportBuilder::new("check");
        b.param("r", 3).computed("lhs", 0).flag("extra-hypothesis");
        b.certificate(Certificate::VertexSet {
            label: "removed".into(),
            vertices: vec![1, 2],
        });
        let report = b.finish(Verdict::Violated);
        let line = report.to_json_line();
        assert!(!line.contains('\n'));
        let back: Report = serde_json::from_str(&line).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn deserialize_enforces_invariant() {
        let bad = r#"{"subject":"x","parameters":{},"computed":{},"certificates":[],"flags":[],"verdict":"violated"}"#;
        assert!(serde_json::from_str::<Report>(bad).is_err());
    }
}
