//! The `verify` command: runs theorem-verifier grids and reports verdicts.

use allbut_core::model::FesSet;
use allbut_core::verify::{
    default_reduction_check, verify_lemma_triple, verify_period_saltus_ratio, verify_pure_ap,
    verify_reduction_2a, verify_reduction_2b, verify_reduction_generic, verify_scaling, Verdict,
};
use anyhow::Result;
use rayon::prelude::*;
use serde::Serialize;

use crate::opts::{Format, Suite, SuiteBounds};
use crate::{EXIT_FAIL, EXIT_OK};

#[derive(Clone, Serialize)]
pub struct CaseResult {
    pub suite: &'static str,
    pub case: String,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CaseResult {
    fn new(suite: &'static str, case: String, verdict: &Verdict) -> Self {
        CaseResult {
            suite,
            case,
            verdict: verdict.label(),
            detail: verdict.detail().map(str::to_owned),
        }
    }

    fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

/// One parameter tuple of some suite. Cases are enumerated in output order
/// and evaluated in parallel; results are reassembled by index, so the
/// report is deterministic whatever the thread count.
enum Case {
    Lemma { a: u64, b: u64, k_limit: u32 },
    Red2a { a: u64, b: u64, n_check: Option<u64> },
    Red2b { a: u64, b: u64, n_check: Option<u64> },
    RedGeneric { a: u64, b: u64, c: u64, n_check: Option<u64> },
    Pure3 { a: u64, b: u64, c: u64 },
    Ratio { a: u64, b: u64 },
    Scaling { a: u64, b: u64, n: u64 },
}

impl Case {
    fn run(&self) -> Result<CaseResult> {
        Ok(match *self {
            Case::Lemma { a, b, k_limit } => {
                let r = verify_lemma_triple(a, b, k_limit)?;
                let mut out = CaseResult::new("lemma15", format!("a={a} b={b}"), &r.verdict);
                if r.verdict.passed() {
                    out.detail = Some(format!("via-a={} via-b={}", r.via_a, r.via_b));
                }
                out
            }
            Case::Red2a { a, b, n_check } => {
                let n = n_check.unwrap_or_else(|| {
                    default_reduction_check(
                        &FesSet::new(&[a as i64, 2 * a as i64]).unwrap(),
                        2 * a,
                    )
                });
                let r = verify_reduction_2a(a, b, n)?;
                CaseResult::new("reduction-2a", format!("a={a} b={b}"), &r.verdict)
            }
            Case::Red2b { a, b, n_check } => {
                let n = n_check.unwrap_or_else(|| {
                    default_reduction_check(&FesSet::new(&[a as i64]).unwrap(), 2 * b)
                });
                let r = verify_reduction_2b(a, b, n)?;
                CaseResult::new("reduction-2b", format!("a={a} b={b}"), &r.verdict)
            }
            Case::RedGeneric { a, b, c, n_check } => {
                let n = n_check.unwrap_or_else(|| {
                    default_reduction_check(&FesSet::new(&[a as i64, b as i64]).unwrap(), c)
                });
                let r = verify_reduction_generic(a, b, c, n)?;
                CaseResult::new("reduction-generic", format!("a={a} b={b} c={c}"), &r.verdict)
            }
            Case::Pure3 { a, b, c } => {
                let x = FesSet::new(&[a as i64, b as i64, c as i64]).unwrap();
                let r = verify_pure_ap(&x, 0)?;
                let mut out = CaseResult::new("pure3", format!("x={x}"), &r.verdict);
                if let (true, Some(p)) = (r.verdict.passed(), r.period) {
                    out.detail = Some(format!("n0={} p={} s={}", p.preperiod, p.period, p.saltus));
                }
                out
            }
            Case::Ratio { a, b } => {
                let r = verify_period_saltus_ratio(a, b)?;
                let mut out = CaseResult::new("ratio", format!("a={a} b={b}"), &r.verdict);
                if r.verdict.passed() {
                    out.detail = Some(format!("p={} s={}", r.period, r.saltus));
                }
                out
            }
            Case::Scaling { a, b, n } => {
                let r = verify_scaling(a, b, n)?;
                CaseResult::new("scaling", format!("a={a} b={b} n={n}"), &r.verdict)
            }
        })
    }
}

fn lemma_cases(bounds: &SuiteBounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for a in 1..=bounds.a_max {
        for b in a + 1..=bounds.b_max {
            if b != 2 * a {
                cases.push(Case::Lemma { a, b, k_limit: bounds.k_limit });
            }
        }
    }
    cases
}

fn reduction_cases(bounds: &SuiteBounds) -> Vec<Case> {
    let max = bounds.max;
    let n_check = bounds.n_check;
    let mut cases = Vec::new();
    for a in 2..=max / 2 {
        for b in a + 1..2 * a {
            cases.push(Case::Red2a { a, b, n_check });
        }
    }
    for b in 2..=max / 2 {
        for a in 1..b {
            if b != 2 * a {
                cases.push(Case::Red2b { a, b, n_check });
            }
        }
    }
    for c in 3..=max {
        for b in 2..c {
            for a in 1..b {
                if c != a + b && c != 2 * a && c != 2 * b {
                    cases.push(Case::RedGeneric { a, b, c, n_check });
                }
            }
        }
    }
    cases
}

fn pure3_cases(bounds: &SuiteBounds) -> Vec<Case> {
    let max = bounds.max;
    let mut cases = Vec::new();
    for a in 1..=max {
        for b in a + 1..=max {
            for c in b + 1..=max {
                cases.push(Case::Pure3 { a, b, c });
            }
        }
    }
    cases
}

fn ratio_cases(bounds: &SuiteBounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for a in 1..=bounds.max {
        for b in a + 1..=bounds.max {
            if b != 2 * a {
                cases.push(Case::Ratio { a, b });
            }
        }
    }
    cases
}

fn scaling_cases(bounds: &SuiteBounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for a in 1..=bounds.max {
        for b in a + 1..=bounds.max {
            if b == 2 * a {
                continue;
            }
            for n in [2, 3] {
                cases.push(Case::Scaling { a, b, n });
            }
        }
    }
    cases
}

pub fn run(suite: Suite, bounds: SuiteBounds, jobs: usize, format: Format) -> Result<u8> {
    let mut cases = Vec::new();
    match suite {
        Suite::Lemma15 => cases.extend(lemma_cases(&bounds)),
        Suite::Reductions => cases.extend(reduction_cases(&bounds)),
        Suite::Pure3 => cases.extend(pure3_cases(&bounds)),
        Suite::Ratio => cases.extend(ratio_cases(&bounds)),
        Suite::Scaling => cases.extend(scaling_cases(&bounds)),
        Suite::All => {
            cases.extend(lemma_cases(&bounds));
            cases.extend(reduction_cases(&bounds));
            cases.extend(pure3_cases(&bounds));
            cases.extend(ratio_cases(&bounds));
            cases.extend(scaling_cases(&bounds));
        }
    }

    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let results: Result<Vec<CaseResult>> =
        pool.install(|| cases.par_iter().map(Case::run).collect());
    let results = results?;
    let failures = results.iter().filter(|r| !r.passed()).count();

    match format {
        Format::Text => {
            for r in &results {
                match &r.detail {
                    Some(d) => println!("{} {}: {} ({d})", r.suite, r.case, r.verdict),
                    None => println!("{} {}: {}", r.suite, r.case, r.verdict),
                }
            }
            println!(
                "{} cases, {} pass, {} fail",
                results.len(),
                results.len() - failures,
                failures
            );
        }
        Format::Csv => {
            println!("suite,case,verdict,detail");
            for r in &results {
                println!(
                    "{},{},{},{}",
                    r.suite,
                    r.case.replace(' ', ";"),
                    r.verdict,
                    r.detail.as_deref().unwrap_or("").replace(' ', ";")
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&results)?),
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_FAIL })
}
