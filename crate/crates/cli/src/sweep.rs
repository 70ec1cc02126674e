//! The `sweep` command: period data for whole families of FES sets.
//!
//! Rows are enumerated in sorted key order and computed by a worker pool,
//! but always written in enumeration order, so output is byte-identical
//! whatever `--jobs` says. Progress is checkpointed every `CHUNK` rows to
//! `<out>.ckpt` (the last completed key); rerunning with the same arguments
//! resumes after it.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use allbut_core::boundary::{detect_period, tighten_preperiod};
use allbut_core::model::FesSet;
use allbut_core::naive;
use allbut_core::verify::verify_lemma_triple;
use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;

use crate::opts::{Family, Format, SweepBounds};
use crate::EXIT_OK;

const CHUNK: usize = 1000;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TaskKey {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: Option<u64>,
}

impl TaskKey {
    fn elements(&self) -> Vec<i64> {
        let mut v = vec![self.a as i64, self.b as i64, self.c as i64];
        if let Some(d) = self.d {
            v.push(d as i64);
        }
        v
    }

    fn ckpt_line(&self) -> String {
        match self.d {
            Some(d) => format!("{},{},{},{}", self.a, self.b, self.c, d),
            None => format!("{},{},{}", self.a, self.b, self.c),
        }
    }

    fn parse(line: &str) -> Option<TaskKey> {
        let fields: Vec<u64> = line
            .trim()
            .split(',')
            .map(|f| f.parse().ok())
            .collect::<Option<_>>()?;
        match fields.as_slice() {
            [a, b, c] => Some(TaskKey { a: *a, b: *b, c: *c, d: None }),
            [a, b, c, d] => Some(TaskKey { a: *a, b: *b, c: *c, d: Some(*d) }),
            _ => None,
        }
    }
}

#[derive(Clone, Serialize)]
pub struct PatternStats {
    pub via_a: u64,
    pub via_b: u64,
}

#[derive(Clone, Serialize)]
pub struct SweepRow {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    pub preperiod: u64,
    pub period: u64,
    pub saltus: u64,
    pub pure: bool,
    pub pattern_stats: PatternStats,
    pub conjecture_tag: &'static str,
}

impl SweepRow {
    fn key(&self) -> TaskKey {
        TaskKey { a: self.a, b: self.b, c: self.c, d: self.d }
    }

    fn csv_line(&self) -> String {
        match self.d {
            Some(d) => format!(
                "{},{},{},{d},{},{},{},{}",
                self.a, self.b, self.c, self.preperiod, self.period, self.saltus, self.pure
            ),
            None => format!(
                "{},{},{},{},{},{},{}",
                self.a, self.b, self.c, self.preperiod, self.period, self.saltus, self.pure
            ),
        }
    }
}

fn csv_header(family: Family) -> &'static str {
    match family {
        Family::Size4Search => "a,b,c,d,preperiod,period,saltus,pure",
        _ => "a,b,c,preperiod,period,saltus,pure",
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn enumerate(family: Family, bounds: &SweepBounds) -> Vec<TaskKey> {
    let mut tasks = Vec::new();
    match family {
        Family::Triples => {
            for a in bounds.a_min..=bounds.a_max {
                for b in bounds.b_min.max(a + 1)..=bounds.b_max {
                    if gcd(a, b) == 1 && b != 2 * a {
                        tasks.push(TaskKey { a, b, c: a + b, d: None });
                    }
                }
            }
        }
        Family::AllSize3 => {
            for a in 1..=bounds.max {
                for b in a + 1..=bounds.max {
                    for c in b + 1..=bounds.max {
                        tasks.push(TaskKey { a, b, c, d: None });
                    }
                }
            }
        }
        Family::Size4Search => {
            for a in 1..=bounds.max {
                for b in a + 1..=bounds.max {
                    for c in b + 1..=bounds.max {
                        for d in c + 1..=bounds.max {
                            tasks.push(TaskKey { a, b, c, d: Some(d) });
                        }
                    }
                }
            }
        }
    }
    tasks
}

/// Tag for how a row's saltus relates to the multiple-of-2a pattern on the
/// open interval `(b, a+b)`. Endpoint hits are reported as their own tag
/// rather than folded into either side.
pub fn conjecture_tag(a: u64, b: u64, saltus: u64) -> &'static str {
    if !saltus.is_multiple_of(a) {
        return "violation";
    }
    let n = saltus / a;
    let multiple = ((b / (2 * a)) + 1) * 2 * a;
    if multiple < a + b {
        return if saltus == a * multiple { "m-multiple-of-2a" } else { "violation" };
    }
    if b < n && n < a + b {
        "other-n"
    } else if n == b || n == a + b {
        "endpoint-n"
    } else {
        "violation"
    }
}

pub fn compute_row(key: &TaskKey, cap: u64) -> Result<SweepRow> {
    let x = FesSet::new(&key.elements()).expect("enumerated keys are valid sets");
    let report = detect_period(&x, None)
        .with_context(|| format!("period detection for {x}"))?;
    let seq = naive::grundy_prefix_with_cap(
        &x,
        report.sound_preperiod() + report.period() + 1,
        cap,
    )?;
    let period = tighten_preperiod(&report, &seq)?;

    let triple = (key.d.is_none() && key.c == key.a + key.b && key.b != 2 * key.a)
        .then_some((key.a, key.b));
    if let Some((a, b)) = triple {
        if period.period != 3 * period.saltus {
            bail!(
                "{x}: period {} is not three times saltus {} — this is a bug",
                period.period,
                period.saltus
            );
        }
        let _ = (a, b);
    }
    let pattern_stats = match triple {
        Some((a, b)) => {
            // One full cycle of placements covers every shape that occurs.
            let lemma = verify_lemma_triple(a, b, report.k_repeat as u32)?;
            if !lemma.verdict.passed() {
                bail!("{x}: {:?}", lemma.verdict);
            }
            PatternStats { via_a: lemma.via_a, via_b: lemma.via_b }
        }
        None => PatternStats { via_a: 0, via_b: 0 },
    };
    let tag = match triple {
        Some((a, b)) if gcd(a, b) == 1 && b >= 3 * a => conjecture_tag(a, b, period.saltus),
        _ => "not-applicable",
    };
    Ok(SweepRow {
        a: key.a,
        b: key.b,
        c: key.c,
        d: key.d,
        preperiod: period.preperiod,
        period: period.period,
        saltus: period.saltus,
        pure: period.is_pure(),
        pattern_stats,
        conjecture_tag: tag,
    })
}

fn ckpt_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".ckpt");
    out.with_file_name(name)
}

/// Rows already on disk from an interrupted run, clipped to the checkpoint.
fn resume_state(
    out: &Path,
    ckpt: &Path,
    format: Format,
    family: Family,
) -> Result<(Option<TaskKey>, Vec<serde_json::Value>)> {
    if !ckpt.exists() || !out.exists() {
        return Ok((None, Vec::new()));
    }
    let Some(last) = TaskKey::parse(&fs::read_to_string(ckpt)?) else {
        return Ok((None, Vec::new()));
    };
    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = serde_json::from_str(&fs::read_to_string(out)?)
                .context("resuming from a corrupt JSON sweep file")?;
            let kept: Vec<serde_json::Value> = rows
                .into_iter()
                .filter(|r| row_key(r).map(|k| k <= last).unwrap_or(false))
                .collect();
            Ok((Some(last), kept))
        }
        _ => {
            let text = fs::read_to_string(out)?;
            let mut kept = String::from(csv_header(family));
            kept.push('\n');
            for line in text.lines().skip(1) {
                if let Some(key) = TaskKey::parse(&clip_fields(line, family)) {
                    if key <= last {
                        kept.push_str(line);
                        kept.push('\n');
                    }
                }
            }
            fs::write(out, kept)?;
            Ok((Some(last), Vec::new()))
        }
    }
}

fn clip_fields(line: &str, family: Family) -> String {
    let n = if matches!(family, Family::Size4Search) { 4 } else { 3 };
    line.split(',').take(n).collect::<Vec<_>>().join(",")
}

fn row_key(row: &serde_json::Value) -> Option<TaskKey> {
    Some(TaskKey {
        a: row.get("a")?.as_u64()?,
        b: row.get("b")?.as_u64()?,
        c: row.get("c")?.as_u64()?,
        d: row.get("d").and_then(|v| v.as_u64()),
    })
}

pub fn run(
    family: Family,
    bounds: &SweepBounds,
    jobs: usize,
    out: &Path,
    format: Format,
    cap: u64,
) -> Result<u8> {
    if matches!(format, Format::Text) {
        bail!("sweep writes files; choose --format csv or json");
    }
    let tasks = enumerate(family, bounds);
    let ckpt = ckpt_path(out);
    let (resume_after, mut json_rows) = resume_state(out, &ckpt, format, family)?;
    let todo: Vec<&TaskKey> = tasks
        .iter()
        .filter(|k| resume_after.map(|last| **k > last).unwrap_or(true))
        .collect();
    if let Some(last) = resume_after {
        eprintln!(
            "resuming after {}: {} of {} rows left",
            last.ckpt_line(),
            todo.len(),
            tasks.len()
        );
    }

    let mut csv_file = match format {
        Format::Csv => {
            let mut file = if resume_after.is_some() {
                fs::OpenOptions::new().append(true).open(out)?
            } else {
                let mut f = fs::File::create(out)?;
                writeln!(f, "{}", csv_header(family))?;
                f
            };
            file.flush()?;
            Some(file)
        }
        _ => None,
    };

    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    for chunk in todo.chunks(CHUNK) {
        let rows: Result<Vec<SweepRow>> =
            pool.install(|| chunk.par_iter().map(|k| compute_row(k, cap)).collect());
        let rows = rows?;
        match format {
            Format::Csv => {
                let file = csv_file.as_mut().expect("csv mode");
                for row in &rows {
                    writeln!(file, "{}", row.csv_line())?;
                }
                file.flush()?;
            }
            Format::Json => {
                json_rows.extend(rows.iter().map(|r| serde_json::to_value(r).unwrap()));
                fs::write(out, serde_json::to_string_pretty(&json_rows)?)?;
            }
            Format::Text => unreachable!(),
        }
        if let Some(last) = rows.last() {
            fs::write(&ckpt, last.key().ckpt_line())?;
        }
    }

    if matches!(format, Format::Json) {
        fs::write(out, serde_json::to_string_pretty(&json_rows)?)?;
    }
    let _ = fs::remove_file(&ckpt);
    Ok(EXIT_OK)
}
