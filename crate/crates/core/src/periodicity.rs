//! Automaton-free periodicity checks on a computed sequence.
//!
//! These work purely on the numbers, so they cross-check the boundary
//! automaton rather than sharing code with it.

use core::fmt;

use crate::model::{ArithmeticPeriod, FesSet, NimSequence, PeriodStatus};

/// Outcome of [`verify_arith_period`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PeriodCheck {
    Pass,
    /// First pile where `G(n + p) != G(n) + s`.
    Fail { n: u64, expected: u64, actual: u64 },
}

impl PeriodCheck {
    #[inline]
    pub fn passed(&self) -> bool {
        matches!(self, PeriodCheck::Pass)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InsufficientSequence {
    pub required: u64,
    pub actual: u64,
}

impl fmt::Display for InsufficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "need {} sequence values, have {}",
            self.required, self.actual
        )
    }
}

impl core::error::Error for InsufficientSequence {}

/// Checks `G(n + p) = G(n) + s` for every `n` in `[n0, n0 + n_check]`,
/// reporting the first counterexample.
pub fn verify_arith_period(
    seq: &NimSequence,
    n0: u64,
    p: u64,
    s: u64,
    n_check: u64,
) -> Result<PeriodCheck, InsufficientSequence> {
    let required = n0 + n_check + p + 1;
    if (seq.len() as u64) < required {
        return Err(InsufficientSequence { required, actual: seq.len() as u64 });
    }
    for n in n0..=n0 + n_check {
        let actual = seq[(n + p) as usize].0 as u64;
        let expected = seq[n as usize].0 as u64 + s;
        if actual != expected {
            return Ok(PeriodCheck::Fail { n, expected, actual });
        }
    }
    Ok(PeriodCheck::Pass)
}

/// Exhaustive scan for the minimal arithmetic period of a sequence prefix.
///
/// Periods are tried in increasing order; for each `p` the saltus is forced
/// by the tail and the preperiod is the last violation plus one. A candidate
/// counts only if the relation held on the whole tail of the sequence and
/// its preperiod lands in the first third — short runs and alternations
/// would otherwise fake tiny periods near the end of the data.
pub fn brute_min_period(seq: &NimSequence, search_bound: u64) -> Option<ArithmeticPeriod> {
    let len = seq.len() as u64;
    if len < 2 {
        return None;
    }
    let last = len - 1;
    for p in 1..=search_bound {
        if 3 * p >= len {
            break;
        }
        let top = (last - p) as usize;
        let Some(saltus) = (seq[(last) as usize].0 as u64).checked_sub(seq[top].0 as u64) else {
            continue;
        };
        let mut preperiod = 0u64;
        for n in (0..=top).rev() {
            if seq[n + p as usize].0 as u64 != seq[n].0 as u64 + saltus {
                preperiod = n as u64 + 1;
                break;
            }
        }
        if preperiod <= last / 3 {
            return Some(ArithmeticPeriod {
                preperiod,
                period: p,
                saltus,
                status: PeriodStatus::VerifiedOnPrefix,
            });
        }
    }
    None
}

/// Default period search bound: the conjectured scale `3a(a+b)` for
/// `{a, b, a+b}` sets, a generous exponential for anything else, both
/// clamped by the caller's cap.
pub fn default_search_bound(x: &FesSet, cap: u64) -> u64 {
    let raw = match x.triple_form() {
        Some((a, b)) => 3 * a * (a + b),
        None => match x.width() {
            0 => 1,
            w if w >= 32 => u64::MAX,
            w => 4u64.saturating_pow(w as u32),
        },
    };
    raw.min(cap)
}
