//! The `kdefect` command line.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a
//! conjecture check or replay reports a violation, 3 on timeout.

pub mod cnf;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use kdefect::constructions::Family;
use kdefect::hypercore::{io as hgio, stable_subhypergraph, Hypergraph, Report, StabilityKind, Verdict};
use kdefect::par::Execution;
use kdefect::solvers::{
    chromatic_number, colorability_defect, independence_number, kneser_chromatic_number, matching_number,
    ChromaticNumber, Deadline, SolveError,
};
use kdefect::verify::{
    check_conjecture, scan, verify_theorem, Conjecture, ConjectureId, Limits, ScanMode, ScanOutput, ScanSpec,
    TheoremParams, VerifyError, THEOREM_IDS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATED: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kdefect", version, about = "Exact Kneser-hypergraph and colorability-defect engine")]
struct Cli {
    /// Wall-clock limit per solve (per instance for scans); 0 disables it.
    #[arg(long, global = true, env = "KDEFECT_TIME_LIMIT_MS", default_value_t = 60_000)]
    time_limit_ms: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named family as a hypergraph.
    Gen(GenArgs),
    /// Compute one invariant of a hypergraph.
    Solve(SolveArgs),
    /// Replay a registered result.
    Verify(VerifyArgs),
    /// Check one conjecture on one hypergraph.
    Check(CheckArgs),
    /// Check a conjecture over a parameter grid or random samples.
    Scan(ScanArgs),
    /// Write a decision problem as DIMACS CNF plus a variable map.
    ExportCnf(ExportArgs),
    /// Decode an external solver's model and validate it as a certificate.
    CheckModel(CheckModelArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Hypergraph file in JSON or text format; `-` reads standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Family as JSON, e.g. '{"family":"fns","n":11,"s":3}'.
    #[arg(long)]
    params: Option<String>,
    /// Family as NAME:key=value,..., e.g. fns:n=11,s=3.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HgFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanFormat {
    Jsonl,
    Table,
}

#[derive(Args, Debug)]
struct FamilyParamArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// One of fns, complete-uniform, trivial, direct-rs, freers1, jafari-ce, frick-gap.
    family: Option<String>,
    /// Extra parameters as key=value.
    pairs: Vec<String>,
    #[command(flatten)]
    values: FamilyParamArgs,
    /// Family as a JSON object.
    #[arg(long)]
    params: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: HgFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Chi,
    Alpha,
    Cd,
    Ecd,
    Nu,
    KneserChi,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(value_enum)]
    quantity: Quantity,
    /// Number of parts (cd, ecd) or Kneser arity (kneser-chi).
    #[arg(long)]
    r: Option<usize>,
    /// Restrict kneser-chi and nu to the s-stable part.
    #[arg(long)]
    s: Option<usize>,
    /// Use the almost s-stable part instead (needs --s).
    #[arg(long)]
    almost: bool,
    /// Equitable parts; `cd --equitable` is `ecd`.
    #[arg(long)]
    equitable: bool,
    #[arg(long)]
    max_removal: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Theorem id; see `kdefect verify list`.
    id: String,
    /// Extra parameters as key=value (samples, seed, n_max, ...).
    pairs: Vec<String>,
    #[command(flatten)]
    values: FamilyParamArgs,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<usize>,
    #[arg(long)]
    max_removal: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(value_parser = parse_conjecture)]
    conjecture: Conjecture,
    #[arg(long)]
    r: usize,
    /// Stability gap; defaults to r for frick and is required otherwise.
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    max_removal: Option<usize>,
    #[arg(long, default_value_t = kdefect::hypercore::DEFAULT_KNESER_CAP)]
    kneser_cap: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    ExhaustiveFns,
    NamedFamilies,
    Random,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, value_parser = parse_conjecture)]
    conjecture: Conjecture,
    #[arg(long, value_enum, default_value = "exhaustive-fns")]
    mode: ModeArg,
    /// Ranges as `a..b` or `a..=b` (both inclusive) or a single value.
    #[arg(long, default_value = "4..10", value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long, default_value = "2..3", value_parser = parse_range)]
    r: RangeInclusive<usize>,
    #[arg(long, default_value = "2..3", value_parser = parse_range)]
    s: RangeInclusive<usize>,
    #[arg(long, default_value = "1..2", value_parser = parse_range)]
    l: RangeInclusive<usize>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    max_edges: usize,
    #[arg(long, default_value_t = 3)]
    max_edge_size: usize,
    #[arg(long)]
    max_removal: Option<usize>,
    #[arg(long, default_value_t = kdefect::hypercore::DEFAULT_KNESER_CAP)]
    kneser_cap: usize,
    #[arg(long, default_value_t = ScanSpec::DEFAULT_EXHAUSTIVE_CAP)]
    exhaustive_cap: usize,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Run instances one after another on the calling thread.
    #[arg(long)]
    sequential: bool,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: ScanFormat,
    /// Write reports here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TaskArg {
    Colorable,
    Kneser,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(long, value_enum)]
    task: TaskArg,
    /// Parts (colorable) or Kneser arity (kneser).
    #[arg(long)]
    r: usize,
    /// Number of classes for the kneser task.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    equitable: bool,
    #[arg(long, default_value_t = kdefect::hypercore::DEFAULT_KNESER_CAP)]
    kneser_cap: usize,
    /// DIMACS output path.
    #[arg(long)]
    output: PathBuf,
    /// Variable map path; defaults to the output path with `.map.json`.
    #[arg(long)]
    map: Option<PathBuf>,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args, Debug)]
struct CheckModelArgs {
    #[arg(long)]
    map: PathBuf,
    /// Solver output: `s`/`v` lines, MiniSat format or bare literals.
    #[arg(long)]
    model: PathBuf,
}

fn parse_conjecture(s: &str) -> Result<Conjecture, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range bound `{t}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Runs the CLI against real standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams and returns the exit status.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            if is_timeout(&e) {
                let _ = writeln!(err, "timeout: {e:#}");
                EXIT_TIMEOUT
            } else {
                let _ = writeln!(err, "error: {e:#}");
                EXIT_USAGE
            }
        }
    }
}

fn is_timeout(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        matches!(c.downcast_ref::<SolveError>(), Some(SolveError::Timeout))
            || matches!(c.downcast_ref::<VerifyError>(), Some(VerifyError::Solve(SolveError::Timeout)))
    })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let time_limit = (cli.time_limit_ms > 0).then(|| Duration::from_millis(cli.time_limit_ms));
    let deadline = || time_limit.map_or(Deadline::none(), Deadline::after);
    match cli.command {
        Command::Gen(a) => gen(a, out),
        Command::Solve(a) => solve(a, deadline(), out),
        Command::Verify(a) => verify(a, deadline(), out),
        Command::Check(a) => check(a, deadline(), out),
        Command::Scan(a) => run_scan(a, time_limit, out),
        Command::ExportCnf(a) => export_cnf(a, out),
        Command::CheckModel(a) => check_model(a, out),
    }
}

fn with_schema(value: impl Serialize) -> Result<Value> {
    let mut obj = Map::new();
    obj.insert("schema".into(), json!(1));
    match serde_json::to_value(value)? {
        Value::Object(fields) => obj.extend(fields),
        other => {
            obj.insert("value".into(), other);
        }
    }
    Ok(Value::Object(obj))
}

fn print_json(out: &mut dyn Write, value: impl Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(&with_schema(value)?)?)?;
    Ok(())
}

fn family_from_map(mut obj: Map<String, Value>, name: Option<&str>) -> Result<Family> {
    if let Some(name) = name {
        obj.insert("family".into(), json!(name));
    }
    if !obj.contains_key("family") {
        bail!("no family given (known: {})", Family::NAMES.join(", "));
    }
    serde_json::from_value(Value::Object(obj)).context("invalid family parameters")
}

fn insert_pairs(obj: &mut Map<String, Value>, pairs: &[String]) -> Result<()> {
    for pair in pairs {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value, got `{pair}`"))?;
        let v: usize = v.trim().parse().with_context(|| format!("`{k}` must be a non-negative integer"))?;
        obj.insert(k.trim().to_owned(), json!(v));
    }
    Ok(())
}

fn insert_values(obj: &mut Map<String, Value>, v: &FamilyParamArgs) {
    for (k, val) in [("n", v.n), ("r", v.r), ("s", v.s), ("l", v.l)] {
        if let Some(val) = val {
            obj.insert(k.into(), json!(val));
        }
    }
}

fn json_object(text: &str) -> Result<Map<String, Value>> {
    match serde_json::from_str(text).context("--params is not valid JSON")? {
        Value::Object(obj) => Ok(obj),
        _ => bail!("--params must be a JSON object"),
    }
}

fn load_input(input: &InputArgs) -> Result<Hypergraph> {
    if let Some(path) = &input.input {
        let text = if path == Path::new("-") {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        } else {
            fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
        };
        return hgio::parse_any(&text).with_context(|| format!("cannot parse {}", path.display()));
    }
    let family = if let Some(params) = &input.params {
        family_from_map(json_object(params)?, None)?
    } else if let Some(spec) = &input.family {
        let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let pairs: Vec<String> = rest.split(',').filter(|p| !p.is_empty()).map(str::to_owned).collect();
        let mut obj = Map::new();
        insert_pairs(&mut obj, &pairs)?;
        family_from_map(obj, Some(name))?
    } else {
        bail!("no input given");
    };
    Ok(family.build()?)
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Result<i32> {
    let mut obj = match &a.params {
        Some(p) => json_object(p)?,
        None => Map::new(),
    };
    insert_values(&mut obj, &a.values);
    insert_pairs(&mut obj, &a.pairs)?;
    let family = family_from_map(obj, a.family.as_deref())?;
    let h = family.build()?;
    match a.format {
        HgFormat::Json => print_json(out, &h)?,
        HgFormat::Text => write!(out, "{}", hgio::to_text(&h))?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SolveOutput<C: Serialize> {
    quantity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    part: Option<String>,
    value: Option<usize>,
    certificate: C,
}

fn solve(a: SolveArgs, deadline: Deadline, out: &mut dyn Write) -> Result<i32> {
    let h = load_input(&a.input)?;
    let need_r = || a.r.ok_or_else(|| anyhow!("--r is required for this quantity"));
    if a.almost && a.s.is_none() {
        bail!("--almost needs --s");
    }
    let part_kind = a.s.map(|s| {
        if a.almost {
            StabilityKind::AlmostStable(s)
        } else {
            StabilityKind::Stable(s)
        }
    });
    if part_kind.is_some() && !matches!(a.quantity, Quantity::KneserChi | Quantity::Nu) {
        bail!("--s only applies to kneser-chi and nu");
    }
    let target = match part_kind {
        Some(kind) => stable_subhypergraph(&h, kind),
        None => h.clone(),
    };
    let base = |quantity, r| SolveOutput {
        quantity,
        r,
        s: a.s,
        part: part_kind.map(|k| k.to_string()),
        value: None,
        certificate: Value::Null,
    };

    let result = match a.quantity {
        Quantity::Chi => {
            let res = chromatic_number(&target, deadline)?;
            SolveOutput {
                value: res.value(),
                certificate: match res {
                    ChromaticNumber::Colorable { coloring, .. } => serde_json::to_value(coloring)?,
                    ChromaticNumber::Infeasible => json!("infeasible: singleton edge"),
                },
                ..base("chi", None)
            }
        }
        Quantity::Alpha => {
            let res = independence_number(&target, deadline)?;
            SolveOutput {
                value: Some(res.size),
                certificate: json!(res.vertices),
                ..base("alpha", None)
            }
        }
        Quantity::Cd | Quantity::Ecd => {
            let r = need_r()?;
            let equitable = a.equitable || a.quantity == Quantity::Ecd;
            let d = colorability_defect(&target, r, equitable, a.max_removal, deadline)?;
            SolveOutput {
                value: Some(d.value),
                certificate: serde_json::to_value(d.certificate)?,
                ..base(if equitable { "ecd" } else { "cd" }, Some(r))
            }
        }
        Quantity::Nu => {
            let m = matching_number(&target, deadline)?;
            SolveOutput {
                value: Some(m.size),
                certificate: json!(m.edges),
                ..base("nu", None)
            }
        }
        Quantity::KneserChi => {
            let r = need_r()?;
            let k = kneser_chromatic_number(&target, r, deadline)?;
            SolveOutput {
                value: Some(k.chi),
                certificate: serde_json::to_value(k.coloring)?,
                ..base("kneser-chi", Some(r))
            }
        }
    };
    match a.format {
        OutFormat::Json => print_json(out, &result)?,
        OutFormat::Text => {
            let value = result.value.map_or("infeasible".to_owned(), |v| v.to_string());
            let arity = result.r.map(|r| format!("^{r}")).unwrap_or_default();
            let part = result.part.map(|p| format!(" on the {p} part")).unwrap_or_default();
            writeln!(out, "{}{arity}{part} = {value}", result.quantity)?;
            writeln!(out, "certificate: {}", serde_json::to_string(&result.certificate)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn report_exit(report: &Report) -> i32 {
    match report.verdict {
        Verdict::Violated => EXIT_VIOLATED,
        Verdict::Timeout => EXIT_TIMEOUT,
        Verdict::Holds | Verdict::Infeasible => EXIT_OK,
    }
}

fn write_report(out: &mut dyn Write, report: &Report, format: ReportFormat) -> Result<()> {
    match format {
        ReportFormat::Json => print_json(out, report),
        ReportFormat::Table => {
            write!(out, "{}", table(std::slice::from_ref(report)))?;
            Ok(())
        }
    }
}

fn verify(a: VerifyArgs, deadline: Deadline, out: &mut dyn Write) -> Result<i32> {
    if a.id == "list" {
        for id in THEOREM_IDS {
            writeln!(out, "{id}")?;
        }
        return Ok(EXIT_OK);
    }
    let mut obj = Map::new();
    insert_values(&mut obj, &a.values);
    for (k, v) in [("samples", a.samples), ("seed", a.seed)] {
        if let Some(v) = v {
            obj.insert(k.into(), json!(v));
        }
    }
    insert_pairs(&mut obj, &a.pairs)?;
    let params: TheoremParams = serde_json::from_value(Value::Object(obj))?;
    let limits = Limits {
        deadline,
        max_removal: a.max_removal,
        ..Limits::default()
    };
    let report = verify_theorem(&a.id, &params, &limits)?;
    write_report(out, &report, a.format)?;
    Ok(report_exit(&report))
}

fn check(a: CheckArgs, deadline: Deadline, out: &mut dyn Write) -> Result<i32> {
    let h = load_input(&a.input)?;
    let id = match a.conjecture {
        Conjecture::Frick => {
            if a.s.is_some_and(|s| s != a.r) {
                bail!("frick's conjecture uses s = r");
            }
            ConjectureId::frick(a.r)
        }
        Conjecture::Jafari => ConjectureId::jafari(a.r, a.s.ok_or_else(|| anyhow!("--s is required"))?),
        Conjecture::Almost => ConjectureId::almost(a.r, a.s.ok_or_else(|| anyhow!("--s is required"))?),
    };
    let limits = Limits {
        deadline,
        max_removal: a.max_removal,
        kneser_cap: a.kneser_cap,
    };
    let report = check_conjecture(&h, id, &limits)?;
    write_report(out, &report, a.format)?;
    Ok(report_exit(&report))
}

fn run_scan(a: ScanArgs, time_limit: Option<Duration>, out: &mut dyn Write) -> Result<i32> {
    let mode = match a.mode {
        ModeArg::ExhaustiveFns => ScanMode::ExhaustiveFns,
        ModeArg::NamedFamilies => ScanMode::NamedFamilies,
        ModeArg::Random => ScanMode::RandomHypergraphs {
            samples: a.samples,
            seed: a.seed,
            max_edges: a.max_edges,
            max_edge_size: a.max_edge_size,
        },
    };
    let mut spec = ScanSpec::new(a.conjecture, mode);
    spec.n_range = a.n;
    spec.r_range = a.r;
    spec.s_range = a.s;
    spec.l_range = a.l;
    spec.time_limit = time_limit;
    spec.max_removal = a.max_removal;
    spec.kneser_cap = a.kneser_cap;
    spec.exhaustive_cap = a.exhaustive_cap;
    spec.jobs = a.jobs;
    spec.execution = if a.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let output = scan(&spec)?;
    let text = match a.format {
        ScanFormat::Jsonl => jsonl(&output)?,
        ScanFormat::Table => {
            let s = &output.summary;
            let mut text = String::new();
            for v in &s.violations {
                text.push_str(&format!("VIOLATED {v}\n"));
            }
            text.push_str(&format!(
                "{} instances: {} holds, {} violated, {} timeout, {} skipped\n\n",
                s.instances, s.holds, s.violated, s.timeouts, s.skipped
            ));
            text.push_str(&table(&output.reports));
            text
        }
    };
    match &a.output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(if output.any_violated() {
        EXIT_VIOLATED
    } else if output.summary.timeouts > 0 {
        EXIT_TIMEOUT
    } else {
        EXIT_OK
    })
}

fn jsonl(output: &ScanOutput) -> Result<String> {
    let mut text = String::new();
    for r in &output.reports {
        text.push_str(&serde_json::to_string(&with_schema(r)?)?);
        text.push('\n');
    }
    Ok(text)
}

fn table(reports: &[Report]) -> String {
    let rows: Vec<[String; 4]> = reports
        .iter()
        .map(|r| {
            let computed: Vec<String> = r.computed.iter().map(|(k, v)| format!("{k}={v}")).collect();
            [r.verdict.to_string(), r.subject.clone(), computed.join(" "), r.flags.join(",")]
        })
        .collect();
    let header = ["verdict", "subject", "computed", "flags"].map(str::to_owned);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut text = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        text.push_str(cells.join("  ").trim_end());
        text.push('\n');
    }
    text
}

fn export_cnf(a: ExportArgs, out: &mut dyn Write) -> Result<i32> {
    let h = load_input(&a.input)?;
    let task = match a.task {
        TaskArg::Colorable => cnf::CnfTask::Colorable {
            r: a.r,
            equitable: a.equitable,
        },
        TaskArg::Kneser => {
            if a.r < 2 {
                bail!("Kneser arity must be at least 2");
            }
            cnf::CnfTask::Kneser {
                t: a.t.ok_or_else(|| anyhow!("--t is required for the kneser task"))?,
                r: a.r,
            }
        }
    };
    let (formula, map) = cnf::encode(&h, task, a.kneser_cap)?;
    let map_path = a.map.unwrap_or_else(|| {
        let mut p = a.output.clone().into_os_string();
        p.push(".map.json");
        PathBuf::from(p)
    });
    let comment = format!(
        "kdefect {}\nhypergraph n={} m={}\nvariable map: {}",
        serde_json::to_string(&task)?,
        h.n(),
        h.num_edges(),
        map_path.display()
    );
    fs::write(&a.output, formula.to_dimacs(&comment)).with_context(|| format!("cannot write {}", a.output.display()))?;
    fs::write(&map_path, serde_json::to_string_pretty(&map)?)
        .with_context(|| format!("cannot write {}", map_path.display()))?;
    print_json(
        out,
        json!({
            "cnf": a.output,
            "map": map_path,
            "variables": formula.num_vars,
            "clauses": formula.clauses.len(),
        }),
    )?;
    Ok(EXIT_OK)
}

fn check_model(a: CheckModelArgs, out: &mut dyn Write) -> Result<i32> {
    let map: cnf::VarMap = serde_json::from_str(
        &fs::read_to_string(&a.map).with_context(|| format!("cannot read {}", a.map.display()))?,
    )
    .context("invalid variable map")?;
    let model = cnf::parse_model(
        &fs::read_to_string(&a.model).with_context(|| format!("cannot read {}", a.model.display()))?,
    )?;
    match model {
        cnf::Model::Unsat => print_json(out, json!({"status": "unsat", "task": map.task}))?,
        cnf::Model::Sat(lits) => {
            let decoded = cnf::decode(&map, &lits)?;
            print_json(out, json!({"status": "valid", "task": map.task, "decoded": decoded}))?;
        }
    }
    Ok(EXIT_OK)
}
