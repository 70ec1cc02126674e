//! Executable checks for the structural facts these games satisfy.
//!
//! Every verifier returns a machine-readable verdict. A `Fail` from any of
//! them on its valid parameter range indicts the implementation, not the
//! mathematics — the checked statements are theorems.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::boundary::{self, detect_period, tighten_preperiod, BoundaryPattern};
use crate::fes;
use crate::model::{ArithmeticPeriod, FesSet, PeriodStatus};
use crate::naive::{self, EngineError};
use crate::periodicity;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail(String),
    Precondition(String),
}

impl Verdict {
    #[inline]
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail(_) => "fail",
            Verdict::Precondition(_) => "precondition-error",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(d) | Verdict::Precondition(d) => Some(d),
        }
    }
}

/// Which disjunct of the three-occurrence property held for a value `k` of
/// `X = {a, b, a+b}`: occurrences at `(n, n+a, n+a+b)` or `(n, n+b, n+a+b)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OccurrenceShape {
    ViaA,
    ViaB,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LemmaTripleReport {
    pub verdict: Verdict,
    /// Shape per value `k = 0..=k_limit`, `ViaA` taking precedence: the
    /// placement run only ever reaches `n + b` when `n + a` was rejected.
    pub shapes: Vec<OccurrenceShape>,
    pub via_a: u64,
    pub via_b: u64,
}

/// Checks that for `X = {a, b, a+b}` every value `k <= k_limit` occupies
/// exactly three piles, in one of the two sanctioned shapes.
pub fn verify_lemma_triple(
    a: u64,
    b: u64,
    k_limit: u32,
) -> Result<LemmaTripleReport, EngineError> {
    let mut report = LemmaTripleReport {
        verdict: Verdict::Pass,
        shapes: Vec::new(),
        via_a: 0,
        via_b: 0,
    };
    if a < 1 || b <= a {
        report.verdict = Verdict::Precondition(format!("need 1 <= a < b, got a={a} b={b}"));
        return Ok(report);
    }
    if b == 2 * a {
        report.verdict = Verdict::Precondition(format!("b = 2a is excluded, got a={a} b={b}"));
        return Ok(report);
    }
    let x = FesSet::new(&[a as i64, b as i64, (a + b) as i64]).expect("valid triple");
    let (_, records) = fes::fes_prefix(&x, k_limit)?;
    report.shapes.reserve(records.len());
    for record in &records {
        if record.positions.len() != 3 {
            report.verdict = Verdict::Fail(format!(
                "value {} occupies {} piles: {:?}",
                record.k,
                record.positions.len(),
                record.positions
            ));
            return Ok(report);
        }
        let n = record.positions[0];
        let shape = if record.positions == [n, n + a, n + a + b] {
            OccurrenceShape::ViaA
        } else if record.positions == [n, n + b, n + a + b] {
            OccurrenceShape::ViaB
        } else {
            report.verdict = Verdict::Fail(format!(
                "value {} at {:?} matches neither occurrence shape",
                record.k, record.positions
            ));
            return Ok(report);
        };
        match shape {
            OccurrenceShape::ViaA => report.via_a += 1,
            OccurrenceShape::ViaB => report.via_b += 1,
        }
        report.shapes.push(shape);
    }
    Ok(report)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionReport {
    pub verdict: Verdict,
    pub piles_checked: u64,
    pub patterns_checked: u64,
}

impl ReductionReport {
    fn precondition(detail: String) -> Self {
        ReductionReport {
            verdict: Verdict::Precondition(detail),
            piles_checked: 0,
            patterns_checked: 0,
        }
    }
}

fn sequences_agree(x1: &FesSet, x2: &FesSet, n_check: u64) -> Result<Verdict, EngineError> {
    let s1 = naive::grundy_prefix(x1, n_check)?;
    let s2 = naive::grundy_prefix(x2, n_check)?;
    for n in 0..=n_check as usize {
        if s1[n] != s2[n] {
            return Ok(Verdict::Fail(format!(
                "sequences for {x1} and {x2} differ at pile {n}: {} vs {}",
                s1[n], s2[n]
            )));
        }
    }
    Ok(Verdict::Pass)
}

/// Walks boundary patterns of `x` until the first repeat and checks each
/// against a permitted shape.
fn patterns_all_match(
    x: &FesSet,
    matches: impl Fn(&BoundaryPattern) -> bool,
) -> (Verdict, u64) {
    let mut pattern = BoundaryPattern::initial(x).expect("nonempty set");
    let mut seen = alloc::collections::BTreeSet::new();
    let mut checked = 0u64;
    while seen.insert(pattern.cells_key().to_vec()) {
        if !matches(&pattern) {
            return (
                Verdict::Fail(format!("iteration {}: unexpected pattern {pattern}", pattern.k())),
                checked,
            );
        }
        checked += 1;
        pattern = boundary::boundary_step(x, &pattern).0;
    }
    (Verdict::Pass, checked)
}

/// Two blocks of `i` blanks and `a - i` stars, for some `1 <= i <= a`.
fn two_block_shape(p: &BoundaryPattern, a: u64) -> bool {
    (1..=a).any(|i| {
        (0..2 * a).all(|off| {
            let star = off % a >= i;
            p.star(off) == star
        })
    })
}

/// One block of `i` blanks and `a - i` stars, blank padding to the window.
fn one_block_shape(p: &BoundaryPattern, a: u64) -> bool {
    (1..=a).any(|i| {
        (0..p.width()).all(|off| {
            let star = off < a && off >= i;
            p.star(off) == star
        })
    })
}

/// `G` for `X = {a, b, 2a}` equals `G` for `{a, 2a}` when `a < b < 2a`.
///
/// `b > 2a` is out of range here: the set then reorders to `{a, 2a, b}` and
/// behaves per the three-element reduction with largest element `b` instead,
/// where the identity can fail (`{1, 2, 3}` already disagrees with `{1, 2}`
/// at pile 3).
pub fn verify_reduction_2a(a: u64, b: u64, n_check: u64) -> Result<ReductionReport, EngineError> {
    if a < 1 || b <= a || b >= 2 * a {
        return Ok(ReductionReport::precondition(format!(
            "need 1 <= a < b < 2a, got a={a} b={b}"
        )));
    }
    let x = FesSet::new(&[a as i64, b as i64, 2 * a as i64]).expect("valid");
    let reduced = FesSet::new(&[a as i64, 2 * a as i64]).expect("valid");
    let mut verdict = sequences_agree(&x, &reduced, n_check)?;
    let mut patterns_checked = 0;
    if verdict.passed() {
        let (v, n) = patterns_all_match(&x, |p| two_block_shape(p, a));
        verdict = v;
        patterns_checked = n;
    }
    Ok(ReductionReport { verdict, piles_checked: n_check + 1, patterns_checked })
}

/// `G` for `X = {a, b, 2b}` equals `G` for `{a}` when `a < b` and `b != 2a`.
pub fn verify_reduction_2b(a: u64, b: u64, n_check: u64) -> Result<ReductionReport, EngineError> {
    if a < 1 || b <= a || b == 2 * a {
        return Ok(ReductionReport::precondition(format!(
            "need 1 <= a < b with b != 2a, got a={a} b={b}"
        )));
    }
    let x = FesSet::new(&[a as i64, b as i64, 2 * b as i64]).expect("valid");
    let reduced = FesSet::new(&[a as i64]).expect("valid");
    let mut verdict = sequences_agree(&x, &reduced, n_check)?;
    let mut patterns_checked = 0;
    if verdict.passed() {
        let (v, n) = patterns_all_match(&x, |p| one_block_shape(p, a));
        verdict = v;
        patterns_checked = n;
    }
    Ok(ReductionReport { verdict, piles_checked: n_check + 1, patterns_checked })
}

/// `G` for `X = {a, b, c}` equals `G` for `{a, b}` when the largest element
/// `c` is none of `a+b`, `2a`, `2b`.
pub fn verify_reduction_generic(
    a: u64,
    b: u64,
    c: u64,
    n_check: u64,
) -> Result<ReductionReport, EngineError> {
    if a < 1 || b <= a || c <= b {
        return Ok(ReductionReport::precondition(format!(
            "need 1 <= a < b < c, got a={a} b={b} c={c}"
        )));
    }
    if c == a + b || c == 2 * a || c == 2 * b {
        return Ok(ReductionReport::precondition(format!(
            "c={c} coincides with a+b, 2a, or 2b"
        )));
    }
    let x = FesSet::new(&[a as i64, b as i64, c as i64]).expect("valid");
    let reduced = FesSet::new(&[a as i64, b as i64]).expect("valid");
    let verdict = sequences_agree(&x, &reduced, n_check)?;
    Ok(ReductionReport { verdict, piles_checked: n_check + 1, patterns_checked: 0 })
}

/// Sequence-equality window that outlasts one full period of the reduced
/// game with room to spare.
pub fn default_reduction_check(reduced: &FesSet, full_width: u64) -> u64 {
    let period = detect_period(reduced, None).map(|r| r.period()).unwrap_or(1);
    3 * period + 2 * full_width
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PureApReport {
    pub verdict: Verdict,
    pub period: Option<ArithmeticPeriod>,
    /// Purity is guaranteed only for `|X| <= 3`; larger sets are reported
    /// without judgement.
    pub theorem_applies: bool,
}

/// Detects the period of `x` and tightens the preperiod; for `|X| <= 3` the
/// verdict is `Pass` exactly when the sequence is purely arithmetic periodic.
pub fn verify_pure_ap(x: &FesSet, n_check: u64) -> Result<PureApReport, EngineError> {
    let theorem_applies = x.len() <= 3;
    if x.is_empty() {
        // G(n) = n: pure with period 1, saltus 1, checked directly.
        let seq = naive::grundy_prefix(x, n_check.max(32))?;
        let ok = periodicity::verify_arith_period(&seq, 0, 1, 1, seq.len() as u64 - 2)
            .map(|c| c.passed())
            .unwrap_or(false);
        return Ok(PureApReport {
            verdict: if ok {
                Verdict::Pass
            } else {
                Verdict::Fail(String::from("identity sequence check failed"))
            },
            period: Some(ArithmeticPeriod {
                preperiod: 0,
                period: 1,
                saltus: 1,
                status: PeriodStatus::VerifiedOnPrefix,
            }),
            theorem_applies,
        });
    }
    let report = match detect_period(x, None) {
        Ok(r) => r,
        Err(e) => {
            return Ok(PureApReport {
                verdict: Verdict::Fail(format!("period detection failed: {e}")),
                period: None,
                theorem_applies,
            })
        }
    };
    let need = (report.sound_preperiod() + report.period() + 1).max(n_check);
    let seq = naive::grundy_prefix(x, need)?;
    let period = match tighten_preperiod(&report, &seq) {
        Ok(p) => p,
        Err(e) => {
            return Ok(PureApReport {
                verdict: Verdict::Fail(format!("tightening failed: {e}")),
                period: None,
                theorem_applies,
            })
        }
    };
    let verdict = if period.is_pure() || !theorem_applies {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("preperiod {} > 0 for {x}", period.preperiod))
    };
    Ok(PureApReport { verdict, period: Some(period), theorem_applies })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatioReport {
    pub verdict: Verdict,
    pub period: u64,
    pub saltus: u64,
}

/// For `X = {a, b, a+b}` the detected period must be exactly three times
/// the saltus.
pub fn verify_period_saltus_ratio(a: u64, b: u64) -> Result<RatioReport, EngineError> {
    if a < 1 || b <= a || b == 2 * a {
        return Ok(RatioReport {
            verdict: Verdict::Precondition(format!("need 1 <= a < b, b != 2a, got a={a} b={b}")),
            period: 0,
            saltus: 0,
        });
    }
    let x = FesSet::new(&[a as i64, b as i64, (a + b) as i64]).expect("valid");
    let report = detect_period(&x, None).expect("nonempty set under pigeonhole limit");
    let (period, saltus) = (report.period(), report.saltus());
    let verdict = if period == 3 * saltus {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("{x}: period {period} != 3 x saltus {saltus}"))
    };
    Ok(RatioReport { verdict, period, saltus })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalingReport {
    pub verdict: Verdict,
    pub base_period: u64,
    pub scaled_period: u64,
}

/// Scaling the set `{a, b, a+b}` by `n_factor` multiplies the period by
/// `n_factor`.
pub fn verify_scaling(a: u64, b: u64, n_factor: u64) -> Result<ScalingReport, EngineError> {
    if a < 1 || b <= a || b == 2 * a || n_factor < 2 {
        return Ok(ScalingReport {
            verdict: Verdict::Precondition(format!(
                "need 1 <= a < b, b != 2a, n >= 2, got a={a} b={b} n={n_factor}"
            )),
            base_period: 0,
            scaled_period: 0,
        });
    }
    let base = FesSet::new(&[a as i64, b as i64, (a + b) as i64]).expect("valid");
    let scaled = FesSet::new(&[
        (n_factor * a) as i64,
        (n_factor * b) as i64,
        (n_factor * (a + b)) as i64,
    ])
    .expect("valid");
    let base_period = detect_period(&base, None).expect("nonempty").period();
    let scaled_period = detect_period(&scaled, None).expect("nonempty").period();
    let verdict = if scaled_period == n_factor * base_period {
        Verdict::Pass
    } else {
        Verdict::Fail(format!(
            "expected {} x {base_period}, detected {scaled_period}",
            n_factor
        ))
    };
    Ok(ScalingReport { verdict, base_period, scaled_period })
}
