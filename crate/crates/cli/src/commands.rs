//! The single-set commands: grundy, period, boundary.

use std::collections::BTreeMap;
use std::io::Write;

use allbut_core::boundary::{boundary_step, detect_period, tighten_preperiod, BoundaryPattern};
use allbut_core::model::FesSet;
use allbut_core::periodicity::brute_min_period;
use allbut_core::{fes, naive};
use anyhow::{Context, Result};
use serde_json::json;

use crate::opts::{EngineChoice, Format};
use crate::{EXIT_FAIL, EXIT_OK, EXIT_USAGE};

pub fn grundy(x: &FesSet, n: u64, engine: EngineChoice, format: Format, cap: u64) -> Result<u8> {
    let seq = match engine {
        EngineChoice::Naive => naive::grundy_prefix_with_cap(x, n, cap)?,
        EngineChoice::Fes => fes::grundy_prefix_with_cap(x, n, cap)?,
        EngineChoice::Both => {
            let a = naive::grundy_prefix_with_cap(x, n, cap)?;
            let b = fes::grundy_prefix_with_cap(x, n, cap)?;
            if a.values() != b.values() {
                let pile = a
                    .values()
                    .iter()
                    .zip(b.values())
                    .position(|(u, v)| u != v)
                    .unwrap_or(0);
                eprintln!(
                    "engine disagreement at pile {pile}: naive={} fes={} — this is a bug",
                    a[pile], b[pile]
                );
                return Ok(EXIT_FAIL);
            }
            a
        }
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    match format {
        Format::Text => {
            for (i, g) in seq.values().iter().enumerate() {
                if i > 0 {
                    write!(out, " ")?;
                }
                write!(out, "{g}")?;
            }
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "n,grundy")?;
            for (i, g) in seq.values().iter().enumerate() {
                writeln!(out, "{i},{g}")?;
            }
        }
        Format::Json => {
            let values: Vec<u32> = seq.values().iter().map(|g| g.0).collect();
            writeln!(out, "{}", serde_json::to_string(&values)?)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn period(x: &FesSet, k_limit: Option<u64>, format: Format, cap: u64) -> Result<u8> {
    if x.is_empty() {
        eprintln!("period requires a nonempty excluded set (the empty game is G(n) = n)");
        return Ok(EXIT_USAGE);
    }
    let report = detect_period(x, k_limit)?;
    let sound = report.to_period();
    // One sequence serves both the tightening pass and the scan oracle.
    let need = (report.sound_preperiod() + report.period() + 1)
        .max(3 * (report.sound_preperiod() + report.period()) + x.width() + 3);
    let seq = naive::grundy_prefix_with_cap(x, need, cap)?;
    let tightened = tighten_preperiod(&report, &seq).context("tightening the preperiod")?;
    let oracle = brute_min_period(&seq, report.period());
    let agreement = oracle.map(|o| o.triple() == tightened.triple()).unwrap_or(false);

    match format {
        Format::Text => {
            println!("x={x} width={}", x.width());
            println!(
                "automaton: n0<={} p={} s={} ({})",
                sound.preperiod,
                sound.period,
                sound.saltus,
                sound.status.label()
            );
            println!(
                "tightened: n0={} p={} s={} pure={} ({})",
                tightened.preperiod,
                tightened.period,
                tightened.saltus,
                tightened.is_pure(),
                tightened.status.label()
            );
            match oracle {
                Some(o) => println!(
                    "oracle:    n0={} p={} s={} ({}) agreement={}",
                    o.preperiod,
                    o.period,
                    o.saltus,
                    o.status.label(),
                    if agreement { "yes" } else { "NO" }
                ),
                None => println!("oracle:    no candidate within bound"),
            }
        }
        Format::Csv => {
            println!("x,preperiod,period,saltus,pure,status,oracle_agrees");
            println!(
                "{x},{},{},{},{},{},{agreement}",
                tightened.preperiod,
                tightened.period,
                tightened.saltus,
                tightened.is_pure(),
                tightened.status.label()
            );
        }
        Format::Json => {
            let period_json = |p: &allbut_core::model::ArithmeticPeriod| {
                json!({
                    "preperiod": p.preperiod,
                    "period": p.period,
                    "saltus": p.saltus,
                    "pure": p.is_pure(),
                    "status": p.status.label(),
                })
            };
            println!(
                "{}",
                json!({
                    "x": x.elements(),
                    "automaton": period_json(&sound),
                    "tightened": period_json(&tightened),
                    "oracle": oracle.as_ref().map(period_json),
                    "agreement": agreement,
                })
            );
        }
    }
    Ok(if agreement { EXIT_OK } else { EXIT_FAIL })
}

pub fn boundary(x: &FesSet, k_limit: Option<u64>) -> Result<u8> {
    if x.is_empty() {
        eprintln!("boundary requires a nonempty excluded set");
        return Ok(EXIT_USAGE);
    }
    let limit = k_limit.unwrap_or_else(|| allbut_core::boundary::default_k_limit(x));
    let mut seen: BTreeMap<Vec<u64>, (u64, u64)> = BTreeMap::new();
    let mut pattern = BoundaryPattern::initial(x).expect("nonempty set");
    loop {
        if let Some(&(k_start, anchor_start)) = seen.get(pattern.cells_key()) {
            println!(
                "cycle: k_start={k_start} anchor_start={anchor_start} k_repeat={} anchor_repeat={} period={} saltus={}",
                pattern.k(),
                pattern.anchor(),
                pattern.anchor() - anchor_start,
                pattern.k() - k_start
            );
            break;
        }
        if pattern.k() >= limit {
            println!("no repeat within {limit} iterations");
            break;
        }
        println!("k={} anchor={} {pattern}", pattern.k(), pattern.anchor());
        seen.insert(pattern.cells_key().to_vec(), (pattern.k(), pattern.anchor()));
        pattern = boundary_step(x, &pattern).0;
    }
    Ok(EXIT_OK)
}
