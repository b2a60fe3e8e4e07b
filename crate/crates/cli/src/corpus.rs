//! Corpus files and the `stats` aggregate.
//!
//! One entry per line, `id ; equation [; labels]`, where labels is a comma
//! separated list such as `noncritical=true,maximally_comparable=false,completely=none`.
//! `#` starts a comment line.

use std::collections::HashMap;
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use aode::analysis::classify;
use aode::frontend::parse_equation;
use aode::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels {
    pub noncritical: Option<bool>,
    pub maximally_comparable: Option<bool>,
    /// `Some(None)` records an explicit `completely=none`.
    pub completely: Option<Option<bool>>,
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub line: usize,
    pub id: String,
    pub equation: String,
    pub expected: Labels,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub id: String,
    pub line: usize,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub id: String,
    pub label: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Stats {
    pub entries: usize,
    pub classified: usize,
    pub noncritical: usize,
    pub maximally_comparable: usize,
    pub completely: usize,
    pub percent_noncritical: f64,
    pub percent_maximally_comparable: f64,
    pub percent_completely: f64,
    pub parse_failures: Vec<Failure>,
    pub mismatches: Vec<Mismatch>,
}

struct Outcome {
    noncritical: bool,
    maximally_comparable: bool,
    completely: Option<bool>,
}

fn parse_bool(key: &str, v: &str) -> Result<bool, String> {
    match v {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(format!("label {key}: expected true or false, found `{v}`")),
    }
}

pub fn parse_labels(text: &str) -> Result<Labels, String> {
    let mut labels = Labels::default();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| format!("label `{item}` is not key=value"))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "noncritical" => labels.noncritical = Some(parse_bool(key, value)?),
            "maximally_comparable" => labels.maximally_comparable = Some(parse_bool(key, value)?),
            "completely" => {
                labels.completely = Some(if value == "none" {
                    None
                } else {
                    Some(parse_bool(key, value)?)
                })
            }
            _ => return Err(format!("unknown label `{key}`")),
        }
    }
    Ok(labels)
}

/// Splits a corpus into entries and line-level failures. Repeated ids are
/// failures; the first occurrence is kept.
pub fn parse_corpus(text: &str) -> (Vec<Entry>, Vec<Failure>) {
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(';').map(str::trim).collect();
        let id = fields[0].to_string();
        let fail = |error: String| Failure {
            id: id.clone(),
            line,
            error,
        };
        if fields.len() < 2 || fields.len() > 3 || id.is_empty() || fields[1].is_empty() {
            failures.push(fail("expected `id ; equation [; labels]`".into()));
            continue;
        }
        if let Some(first) = seen.get(&id) {
            failures.push(fail(format!("duplicate id (first used on line {first})")));
            continue;
        }
        seen.insert(id.clone(), line);
        let expected = match fields.get(2).map(|s| parse_labels(s)).transpose() {
            Ok(l) => l.unwrap_or_default(),
            Err(e) => {
                failures.push(fail(e));
                continue;
            }
        };
        entries.push(Entry {
            line,
            id,
            equation: fields[1].to_string(),
            expected,
        });
    }
    (entries, failures)
}

fn process(e: &Entry) -> Result<Outcome, Error> {
    let f = parse_equation(&e.equation)?;
    let c = classify(&f)?;
    Ok(Outcome {
        noncritical: c.noncritical,
        maximally_comparable: c.maximally_comparable,
        completely: c.completely,
    })
}

fn show(v: Option<bool>) -> String {
    v.map_or("none".to_string(), |b| b.to_string())
}

fn mismatches(e: &Entry, o: &Outcome) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut check = |label: &str, expected: Option<Option<bool>>, actual: Option<bool>| {
        if let Some(exp) = expected {
            if exp != actual {
                out.push(Mismatch {
                    id: e.id.clone(),
                    label: label.into(),
                    expected: show(exp),
                    actual: show(actual),
                });
            }
        }
    };
    check(
        "noncritical",
        e.expected.noncritical.map(Some),
        Some(o.noncritical),
    );
    check(
        "maximally_comparable",
        e.expected.maximally_comparable.map(Some),
        Some(o.maximally_comparable),
    );
    check("completely", e.expected.completely, o.completely);
    out
}

fn percent(count: usize, total: usize) -> f64 {
    if total == 0 {
        return 0.0;
    }
    ((count * 10000 + total / 2) / total) as f64 / 100.0
}

pub fn run(text: &str, jobs: usize) -> Result<Stats, Error> {
    let (entries, mut parse_failures) = parse_corpus(text);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {jobs} workers: {e}")))?;
    let mut results: Vec<(&Entry, Result<Outcome, Error>)> =
        pool.install(|| entries.par_iter().map(|e| (e, process(e))).collect());
    results.sort_by(|a, b| a.0.id.cmp(&b.0.id));

    let mut stats = Stats {
        entries: entries.len() + parse_failures.len(),
        classified: 0,
        noncritical: 0,
        maximally_comparable: 0,
        completely: 0,
        percent_noncritical: 0.0,
        percent_maximally_comparable: 0.0,
        percent_completely: 0.0,
        parse_failures: Vec::new(),
        mismatches: Vec::new(),
    };
    for (e, r) in results {
        match r {
            Ok(o) => {
                stats.classified += 1;
                stats.noncritical += o.noncritical as usize;
                stats.maximally_comparable += o.maximally_comparable as usize;
                stats.completely += (o.completely == Some(true)) as usize;
                stats.mismatches.extend(mismatches(e, &o));
            }
            Err(err) => parse_failures.push(Failure {
                id: e.id.clone(),
                line: e.line,
                error: err.to_string(),
            }),
        }
    }
    parse_failures.sort_by(|a, b| (&a.id, a.line).cmp(&(&b.id, b.line)));
    stats.parse_failures = parse_failures;
    stats.percent_noncritical = percent(stats.noncritical, stats.classified);
    stats.percent_maximally_comparable = percent(stats.maximally_comparable, stats.classified);
    stats.percent_completely = percent(stats.completely, stats.classified);
    Ok(stats)
}

impl Stats {
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "entries: {}", self.entries);
        let _ = writeln!(s, "classified: {}", self.classified);
        let _ = writeln!(
            s,
            "noncritical: {} ({:.2}%)",
            self.noncritical, self.percent_noncritical
        );
        let _ = writeln!(
            s,
            "maximally comparable: {} ({:.2}%)",
            self.maximally_comparable, self.percent_maximally_comparable
        );
        let _ = writeln!(
            s,
            "completely maximally comparable: {} ({:.2}%)",
            self.completely, self.percent_completely
        );
        let _ = writeln!(s, "failures: {}", self.parse_failures.len());
        for f in &self.parse_failures {
            let _ = writeln!(s, "  line {} [{}]: {}", f.line, f.id, f.error);
        }
        let _ = writeln!(s, "mismatches: {}", self.mismatches.len());
        for m in &self.mismatches {
            let _ = writeln!(
                s,
                "  {}: {} expected {}, got {}",
                m.id, m.label, m.expected, m.actual
            );
        }
        s
    }
}
