//! Task vocabulary shared by the command-line front end.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::io::{self, InputFormat};
use crate::labelling::Label;
use crate::principles::{principle_report, PrincipleReport, SampleSpec, Verdict};
use crate::propagation::grounded_labelling;
use crate::semantics::{evaluate, Outcome, Semantics};
use crate::weakly_complete::{credulous_wc, skeptical_wc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    /// Some extension or labelling.
    SE,
    /// Every extension or labelling.
    EE,
    /// Credulous acceptance.
    DC,
    /// Skeptical acceptance.
    DS,
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SE" => Ok(Problem::SE),
            "EE" => Ok(Problem::EE),
            "DC" => Ok(Problem::DC),
            "DS" => Ok(Problem::DS),
            _ => Err(Error::Invalid(format!("unknown problem `{s}`"))),
        }
    }
}

/// Parses `PROBLEM-SEMANTICS`, e.g. `EE-BBU-CO`.
pub fn parse_task_name(s: &str) -> Result<(Problem, Semantics)> {
    let (p, sem) = s
        .split_once('-')
        .ok_or_else(|| Error::Invalid(format!("task `{s}` is not PROBLEM-SEMANTICS")))?;
    Ok((p.parse()?, sem.parse()?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone)]
pub struct SolveSpec {
    pub problem: Problem,
    pub semantics: Semantics,
    pub query: Option<String>,
    pub input: PathBuf,
    pub format: InputFormat,
    pub output: OutputFormat,
    pub config: Config,
}

#[derive(Debug, Clone)]
pub struct ReportSpec {
    pub semantics: Vec<Semantics>,
    pub sample: SampleSpec,
    pub output: OutputFormat,
    pub config: Config,
}

#[derive(Debug, Clone)]
pub enum TaskSpec {
    Solve(SolveSpec),
    Report(ReportSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_LIMIT: i32 = 2;

impl TaskOutput {
    fn ok(stdout: String) -> Self {
        TaskOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    pub fn from_error(err: &Error) -> Self {
        TaskOutput {
            code: if err.is_limit() {
                EXIT_LIMIT
            } else {
                EXIT_ERROR
            },
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

pub fn run_task(spec: &TaskSpec) -> TaskOutput {
    let result = match spec {
        TaskSpec::Solve(s) => run_solve(s),
        TaskSpec::Report(r) => run_report(r),
    };
    match result {
        Ok(out) => TaskOutput::ok(out),
        Err(e) => TaskOutput::from_error(&e),
    }
}

fn run_solve(spec: &SolveSpec) -> Result<String> {
    match (spec.problem, &spec.query) {
        (Problem::DC | Problem::DS, None) => {
            return Err(Error::Invalid(
                "DC and DS need a query argument (-a)".into(),
            ))
        }
        (Problem::SE | Problem::EE, Some(_)) => {
            return Err(Error::Invalid("SE and EE take no query argument".into()))
        }
        _ => {}
    }
    let text = std::fs::read_to_string(&spec.input)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", spec.input.display())))?;
    let fw = io::parse(&text, spec.format)?;
    solve(&fw, spec)
}

/// Answers a solve task on an already parsed framework.
pub fn solve(fw: &Framework, spec: &SolveSpec) -> Result<String> {
    if let Some(q) = &spec.query {
        let answer = decide(fw, spec, q)?;
        return Ok(format!("{}\n", io::yes_no(answer)));
    }
    let outcome = evaluate(fw, spec.semantics, &spec.config)?;
    let json = spec.output == OutputFormat::Json;
    let body = match (spec.problem, &outcome) {
        (Problem::EE, Outcome::Labellings(set)) if json => io::labellings_json(fw, set) + "\n",
        (Problem::EE, Outcome::Labellings(set)) => io::labellings_text(fw, set),
        (Problem::EE, Outcome::Extensions(exts)) if json => io::extensions_json(fw, exts) + "\n",
        (Problem::EE, Outcome::Extensions(exts)) => io::extensions_text(fw, exts),
        (_, Outcome::Labellings(set)) => {
            let grounded = grounded_labelling(fw);
            let witness = if set.contains(&grounded) {
                Some(&grounded)
            } else {
                io::sorted_labellings(fw, set).into_iter().next()
            };
            let line = match witness {
                None => "NO".to_string(),
                Some(l) if json => io::labelling_json(fw, l),
                Some(l) => io::labelling_text(fw, l),
            };
            line + "\n"
        }
        (_, Outcome::Extensions(exts)) => {
            let grounded = grounded_labelling(fw).in_set();
            let witness = if exts.contains(&grounded) {
                Some(grounded)
            } else {
                exts.iter().min_by_key(|e| io::sorted_names(fw, e)).cloned()
            };
            let line = match witness {
                None => "NO".to_string(),
                Some(e) if json => io::extension_json(fw, &e),
                Some(e) => io::extension_text(fw, &e),
            };
            line + "\n"
        }
    };
    Ok(body)
}

fn decide(fw: &Framework, spec: &SolveSpec, query: &str) -> Result<bool> {
    let a = fw.arg(query)?;
    match (spec.problem, spec.semantics) {
        (Problem::DC, Semantics::WeaklyComplete) => return credulous_wc(fw, query),
        (Problem::DS, Semantics::WeaklyComplete) => return skeptical_wc(fw, query),
        _ => {}
    }
    let accepts: Vec<bool> = match evaluate(fw, spec.semantics, &spec.config)? {
        Outcome::Labellings(set) => set.iter().map(|l| l.get(a) == Label::In).collect(),
        Outcome::Extensions(exts) => exts.iter().map(|e| e.contains(a)).collect(),
    };
    Ok(match spec.problem {
        Problem::DC => accepts.iter().any(|&x| x),
        _ => accepts.iter().all(|&x| x),
    })
}

fn run_report(spec: &ReportSpec) -> Result<String> {
    let report = principle_report(&spec.semantics, &spec.sample, &spec.config)?;
    Ok(match spec.output {
        OutputFormat::Text => render_report(&report),
        OutputFormat::Json => report_json(&report).to_string() + "\n",
    })
}

fn framework_inline(fw: &Framework) -> String {
    let attacks: Vec<String> = fw
        .attack_names()
        .map(|(a, b)| format!("{a}->{b}"))
        .collect();
    format!(
        "args={{{}}} attacks={{{}}}",
        fw.names().join(","),
        attacks.join(",")
    )
}

const NOTES: &[&str] = &[
    "WPR directionality and abstention are expected to fail: two mutually attacking arguments \
     refute abstention, and the floating assignment refutes directionality.",
    "UBGR is single-status, so abstention holds trivially.",
    "BBU expectations come from an external principle analysis; a missing refutation there is \
     inconclusive.",
];

/// Plain-text matrix, one row per (semantics, principle), with counterexamples inline.
pub fn render_report(report: &PrincipleReport) -> String {
    let s = &report.sample;
    let probs: Vec<String> = s.probabilities.iter().map(|p| p.to_string()).collect();
    let mut out = String::new();
    writeln!(
        out,
        "sample: frameworks={} random={} n<={} p={} seed={} cycles<={}",
        report.frameworks,
        s.samples,
        s.max_n,
        probs.join(","),
        s.seed,
        s.max_cycle_len
    )
    .unwrap();
    for ((sem, principle), row) in &report.rows {
        let verdict = match (&row.verdict, row.counts.is_some()) {
            (Verdict::HoldsOnSample, false) => "holds-on-sample",
            (Verdict::Refuted(_), false) => "refuted",
            (Verdict::HoldsOnSample, true) => "always-one",
            (Verdict::Refuted(_), true) => "varies",
        };
        let agrees = match row.agrees() {
            Some(true) => "ok",
            Some(false) => "MISMATCH",
            None => "-",
        };
        write!(
            out,
            "{:<7} {:<18} {:<16} expected={:<4} {:<8}",
            sem.code(),
            principle.name(),
            verdict,
            row.expected.as_str(),
            agrees
        )
        .unwrap();
        if let Some((min, max)) = row.counts {
            write!(out, " count={min}..{max}").unwrap();
        }
        if let Verdict::Refuted(c) = &row.verdict {
            write!(
                out,
                " [{}] {}; {}",
                c.source,
                c.detail,
                framework_inline(&c.framework)
            )
            .unwrap();
            for l in &c.labellings {
                write!(out, "; {}", io::labelling_text(&c.framework, l)).unwrap();
            }
        }
        out.push('\n');
    }
    let contradictions = report.contradictions();
    if contradictions.is_empty() {
        out.push_str("contradictions: none\n");
    } else {
        let list: Vec<String> = contradictions
            .iter()
            .map(|(s, p)| format!("{}/{}", s.code(), p.name()))
            .collect();
        writeln!(out, "contradictions: {}", list.join(" ")).unwrap();
    }
    for note in NOTES {
        writeln!(out, "note: {note}").unwrap();
    }
    out
}

pub fn report_json(report: &PrincipleReport) -> Value {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|((sem, principle), row)| {
            let counterexample = match &row.verdict {
                Verdict::HoldsOnSample => Value::Null,
                Verdict::Refuted(c) => json!({
                    "source": c.source,
                    "detail": c.detail,
                    "arguments": c.framework.names(),
                    "attacks": c.framework.attack_names().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
                    "labellings": c.labellings.iter()
                        .map(|l| serde_json::from_str::<Value>(&io::labelling_json(&c.framework, l)).unwrap())
                        .collect::<Vec<_>>(),
                }),
            };
            json!({
                "semantics": sem.code(),
                "principle": principle.name(),
                "holds": row.verdict.holds(),
                "expected": row.expected.as_str(),
                "agrees": row.agrees(),
                "counts": row.counts,
                "counterexample": counterexample,
            })
        })
        .collect();
    json!({
        "frameworks": report.frameworks,
        "samples": report.sample.samples,
        "max_n": report.sample.max_n,
        "probabilities": report.sample.probabilities,
        "seed": report.sample.seed,
        "rows": rows,
        "notes": NOTES,
    })
}
