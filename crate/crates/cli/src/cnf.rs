//! DIMACS export of the colorability and Kneser-coloring decision problems,
//! plus decoding of an external solver's model back into a certificate.
//!
//! Variable layout, 1-based:
//! - colorable(r): `x(v, c) = (v - 1) * r + c` for vertex `v` and part `c`
//! - kneser(t, r): `y(i, j) = (i - 1) * t + j` for the `i`-th edge in
//!   canonical order and class `j`
//!
//! Variables above `primary_vars` are sequential-counter auxiliaries used by
//! the equitable cardinality constraints.

use anyhow::{bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};

use kdefect::hypercore::{kneser_hypergraph, Edge, Hypergraph};
use kdefect::solvers::{
    validate_defect_certificate, validate_kneser_coloring, Deadline, DefectCertificate, KneserColoring,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CnfTask {
    /// Partition into `r` parts with no edge inside a part.
    Colorable { r: usize, equitable: bool },
    /// Partition of `E(H)` into at most `t` classes, none holding `r`
    /// pairwise disjoint edges.
    Kneser { t: usize, r: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i64>>,
}

impl Cnf {
    fn fresh(&mut self) -> i64 {
        self.num_vars += 1;
        self.num_vars as i64
    }

    pub fn to_dimacs(&self, comment: &str) -> String {
        let mut out = String::new();
        for line in comment.lines() {
            out.push_str("c ");
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!("p cnf {} {}\n", self.num_vars, self.clauses.len()));
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }

    /// Sinz sequential counter: at most `k` of `lits` are true.
    fn at_most(&mut self, lits: &[i64], k: usize) {
        let n = lits.len();
        if k >= n {
            return;
        }
        if k == 0 {
            self.clauses.extend(lits.iter().map(|&x| vec![-x]));
            return;
        }
        // s[i][j]: at least j + 1 of lits[..=i] are true
        let s: Vec<Vec<i64>> = (0..n - 1).map(|_| (0..k).map(|_| self.fresh()).collect()).collect();
        self.clauses.push(vec![-lits[0], s[0][0]]);
        for &sj in &s[0][1..] {
            self.clauses.push(vec![-sj]);
        }
        for i in 1..n - 1 {
            self.clauses.push(vec![-lits[i], s[i][0]]);
            self.clauses.push(vec![-s[i - 1][0], s[i][0]]);
            for j in 1..k {
                self.clauses.push(vec![-lits[i], -s[i - 1][j - 1], s[i][j]]);
                self.clauses.push(vec![-s[i - 1][j], s[i][j]]);
            }
            self.clauses.push(vec![-lits[i], -s[i - 1][k - 1]]);
        }
        self.clauses.push(vec![-lits[n - 1], -s[n - 2][k - 1]]);
    }

    fn at_least(&mut self, lits: &[i64], k: usize) {
        if k == 0 {
            return;
        }
        let negated: Vec<i64> = lits.iter().map(|&x| -x).collect();
        match lits.len().checked_sub(k) {
            Some(slack) => self.at_most(&negated, slack),
            None => self.clauses.push(Vec::new()),
        }
    }

    fn exactly_one(&mut self, lits: &[i64]) {
        self.clauses.push(lits.to_vec());
        for (i, &a) in lits.iter().enumerate() {
            for &b in &lits[i + 1..] {
                self.clauses.push(vec![-a, -b]);
            }
        }
    }
}

/// Companion file mapping CNF variables back to the instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarMap {
    pub schema: u32,
    pub task: CnfTask,
    pub hypergraph: Hypergraph,
    pub num_vars: usize,
    pub primary_vars: usize,
    pub variables: Vec<VarEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VarEntry {
    Part { var: usize, vertex: usize, part: usize },
    Class { var: usize, edge: Edge, class: usize },
}

pub fn encode(h: &Hypergraph, task: CnfTask, kneser_cap: usize) -> Result<(Cnf, VarMap)> {
    let mut cnf = Cnf::default();
    let mut variables = Vec::new();
    match task {
        CnfTask::Colorable { r, equitable } => {
            let n = h.n();
            cnf.num_vars = n * r;
            let x = |v: usize, c: usize| ((v - 1) * r + c) as i64;
            for v in 1..=n {
                for c in 1..=r {
                    variables.push(VarEntry::Part {
                        var: x(v, c) as usize,
                        vertex: v,
                        part: c,
                    });
                }
                cnf.exactly_one(&(1..=r).map(|c| x(v, c)).collect::<Vec<_>>());
            }
            for e in h.edges() {
                for c in 1..=r {
                    cnf.clauses.push(e.iter().map(|&v| -x(v, c)).collect());
                }
            }
            if equitable && r > 0 {
                for c in 1..=r {
                    let lits: Vec<i64> = (1..=n).map(|v| x(v, c)).collect();
                    cnf.at_most(&lits, n.div_ceil(r));
                    cnf.at_least(&lits, n / r);
                }
            }
        }
        CnfTask::Kneser { t, r } => {
            let kg = kneser_hypergraph(h, r, kneser_cap).context("cannot enumerate disjoint families")?;
            let m = h.num_edges();
            cnf.num_vars = m * t;
            let y = |i: usize, j: usize| ((i - 1) * t + j) as i64;
            for (idx, e) in h.edges().iter().enumerate() {
                for j in 1..=t {
                    variables.push(VarEntry::Class {
                        var: y(idx + 1, j) as usize,
                        edge: e.clone(),
                        class: j,
                    });
                }
                cnf.exactly_one(&(1..=t).map(|j| y(idx + 1, j)).collect::<Vec<_>>());
            }
            for family in kg.edges() {
                for j in 1..=t {
                    cnf.clauses.push(family.iter().map(|&i| -y(i, j)).collect());
                }
            }
        }
    }
    let primary_vars = variables.len();
    let map = VarMap {
        schema: 1,
        task,
        hypergraph: h.clone(),
        num_vars: cnf.num_vars,
        primary_vars,
        variables,
    };
    Ok((cnf, map))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Sat(Vec<i64>),
    Unsat,
}

/// Accepts competition output (`s SATISFIABLE` / `v ...` lines), MiniSat
/// output (`SAT` then literals) or a bare literal list.
pub fn parse_model(text: &str) -> Result<Model> {
    let mut lits = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let upper = line.to_ascii_uppercase();
        if upper.contains("UNSAT") {
            return Ok(Model::Unsat);
        }
        if line.starts_with('s') || upper == "SAT" {
            continue;
        }
        let body = line.strip_prefix('v').unwrap_or(line);
        for tok in body.split_whitespace() {
            let lit: i64 = tok.parse().with_context(|| format!("model line {}: bad literal `{tok}`", i + 1))?;
            if lit != 0 {
                lits.push(lit);
            }
        }
    }
    Ok(Model::Sat(lits))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Decoded {
    Colorable { certificate: DefectCertificate },
    Kneser { coloring: KneserColoring },
}

/// Decodes a satisfying assignment and re-validates it as a certificate.
pub fn decode(map: &VarMap, model: &[i64]) -> Result<Decoded> {
    ensure!(map.schema == 1, "unsupported map schema {}", map.schema);
    let mut value = vec![None; map.num_vars + 1];
    for &lit in model {
        let var = lit.unsigned_abs() as usize;
        ensure!(var <= map.num_vars, "model mentions variable {var} beyond {}", map.num_vars);
        value[var] = Some(lit > 0);
    }
    let truth = |var: usize| value[var] == Some(true);
    let h = &map.hypergraph;
    match map.task {
        CnfTask::Colorable { r, equitable } => {
            let mut part_of = vec![0usize; h.n() + 1];
            for entry in &map.variables {
                let VarEntry::Part { var, vertex, part } = *entry else {
                    bail!("colorable map holds a non-part variable");
                };
                if truth(var) {
                    ensure!(part_of[vertex] == 0, "vertex {vertex} is in two parts");
                    part_of[vertex] = part;
                }
            }
            let mut parts = vec![Vec::new(); r];
            for v in 1..=h.n() {
                ensure!(part_of[v] != 0, "vertex {v} is in no part");
                parts[part_of[v] - 1].push(v);
            }
            let certificate = DefectCertificate {
                removed: Vec::new(),
                parts,
                equitable,
            };
            validate_defect_certificate(h, r, &certificate)?;
            Ok(Decoded::Colorable { certificate })
        }
        CnfTask::Kneser { t, r } => {
            let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); t];
            for entry in &map.variables {
                let VarEntry::Class { var, edge, class } = entry else {
                    bail!("kneser map holds a non-class variable");
                };
                if truth(*var) {
                    classes[class - 1].push(edge.clone());
                }
            }
            classes.retain(|c| !c.is_empty());
            let coloring = KneserColoring::from_classes(r, classes, Deadline::none())?;
            validate_kneser_coloring(h, r, &coloring)?;
            ensure!(coloring.num_classes() <= t, "more than {t} classes");
            Ok(Decoded::Kneser { coloring })
        }
    }
}
