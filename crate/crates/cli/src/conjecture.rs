//! The `conjecture` command: for coprime `{a, b, a+b}` with `b >= 3a`,
//! report how the observed saltus relates to multiples of `2a` in the
//! interval `(b, a+b)`. Evidence only — nothing here asserts the pattern.

use allbut_core::boundary::detect_period;
use allbut_core::model::FesSet;
use anyhow::{bail, Result};
use serde::Serialize;

use crate::opts::Format;
use crate::sweep::conjecture_tag;
use crate::EXIT_OK;

#[derive(Clone, Serialize)]
pub struct ConjectureVerdict {
    pub a: u64,
    pub b: u64,
    pub saltus: u64,
    /// The unique multiple of `2a` strictly inside `(b, a+b)`, when one
    /// exists; at most one fits because the interval is shorter than `2a`.
    pub predicted_m: Option<u64>,
    /// `saltus / a`.
    pub observed_n: u64,
    pub matches: bool,
    pub tag: &'static str,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn classify(a: u64, b: u64) -> Result<ConjectureVerdict> {
    let x = FesSet::new(&[a as i64, b as i64, (a + b) as i64]).expect("valid triple");
    let report = detect_period(&x, None)?;
    let saltus = report.saltus();
    if report.period() != 3 * saltus {
        bail!("{x}: period {} != 3 x saltus {saltus} — this is a bug", report.period());
    }
    let multiple = ((b / (2 * a)) + 1) * 2 * a;
    let predicted_m = (multiple < a + b).then_some(multiple);
    let tag = conjecture_tag(a, b, saltus);
    Ok(ConjectureVerdict {
        a,
        b,
        saltus,
        predicted_m,
        observed_n: saltus / a,
        matches: matches!(tag, "m-multiple-of-2a" | "other-n"),
        tag,
    })
}

pub fn run(a_max: u64, b_max: u64, format: Format) -> Result<u8> {
    let mut verdicts = Vec::new();
    for a in 1..=a_max {
        // b = 3a passes the coprimality filter only as (1, 3); it sits on
        // the interval boundary and is reported with the endpoint tag.
        for b in 3 * a..=b_max {
            if gcd(a, b) == 1 {
                verdicts.push(classify(a, b)?);
            }
        }
    }
    match format {
        Format::Text => {
            for v in &verdicts {
                let m = v
                    .predicted_m
                    .map(|m| m.to_string())
                    .unwrap_or_else(|| "-".into());
                println!(
                    "{{a,b,a+b}}={{{},{},{}}} saltus={} n={} interval=({},{}) m={} tag={}",
                    v.a,
                    v.b,
                    v.a + v.b,
                    v.saltus,
                    v.observed_n,
                    v.b,
                    v.a + v.b,
                    m,
                    v.tag
                );
            }
            let matched = verdicts.iter().filter(|v| v.matches).count();
            println!(
                "{} pairs: {} match, {} endpoint, {} violation",
                verdicts.len(),
                matched,
                verdicts.iter().filter(|v| v.tag == "endpoint-n").count(),
                verdicts.iter().filter(|v| v.tag == "violation").count()
            );
        }
        Format::Csv => {
            println!("a,b,saltus,predicted_m,observed_n,matches,tag");
            for v in &verdicts {
                println!(
                    "{},{},{},{},{},{},{}",
                    v.a,
                    v.b,
                    v.saltus,
                    v.predicted_m.map(|m| m.to_string()).unwrap_or_default(),
                    v.observed_n,
                    v.matches,
                    v.tag
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&verdicts)?),
    }
    Ok(EXIT_OK)
}
