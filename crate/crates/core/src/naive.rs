//! Reference Grundy engine: `G(n) = mex{ G(n - s) : s not in X, 1 <= s <= n }`.
//!
//! The option set of pile `n` is every earlier pile except the at most `|X|`
//! piles `n - x`. Tracking how often each value has occurred among piles
//! `< n` makes the mex computable from the running frontier value and the
//! handful of excluded occurrences, so each pile costs `O(|X|)` amortized
//! instead of `O(n)`. The literal evaluator is kept alongside as the in-repo
//! oracle for that shortcut.

use alloc::vec::Vec;
use core::fmt;

use crate::model::{FesSet, NimSequence, Nimber, SequenceSource};

/// Default hard cap on requested prefix length, to keep runaway sweep
/// parameters from exhausting memory.
pub const DEFAULT_PILE_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EngineError {
    /// The requested prefix exceeds the configured cap.
    CapExceeded { requested: u64, cap: u64 },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::CapExceeded { requested, cap } => {
                write!(f, "requested {requested} piles, cap is {cap}")
            }
        }
    }
}

impl core::error::Error for EngineError {}

pub(crate) fn check_cap(n_max: u64, cap: u64) -> Result<usize, EngineError> {
    // Stored nimbers are u32 and G(n) <= n, so the prefix length must also
    // stay below u32::MAX regardless of the configured cap.
    let hard = cap.min(u32::MAX as u64 - 1);
    if n_max > hard {
        return Err(EngineError::CapExceeded { requested: n_max, cap: hard });
    }
    Ok(n_max as usize)
}

/// `G(0..=n_max)` under the default cap.
pub fn grundy_prefix(x: &FesSet, n_max: u64) -> Result<NimSequence, EngineError> {
    grundy_prefix_with_cap(x, n_max, DEFAULT_PILE_CAP)
}

/// `G(0..=n_max)`, refusing requests beyond `cap` piles.
pub fn grundy_prefix_with_cap(
    x: &FesSet,
    n_max: u64,
    cap: u64,
) -> Result<NimSequence, EngineError> {
    let n_max = check_cap(n_max, cap)?;
    let excluded = x.elements();
    let mut values: Vec<Nimber> = Vec::with_capacity(n_max + 1);
    // counts[v] = occurrences of value v among all piles computed so far.
    let mut counts: Vec<u32> = Vec::new();
    // Least value that has never occurred; the mex of the full prefix.
    let mut frontier: u32 = 0;
    // Scratch for the values at this pile's excluded positions.
    let mut shadowed: Vec<u32> = Vec::with_capacity(excluded.len());

    for n in 0..=n_max as u64 {
        shadowed.clear();
        for &xv in excluded {
            if xv <= n {
                shadowed.push(values[(n - xv) as usize].0);
            }
        }
        // The mex over the options is the frontier unless some smaller value
        // occurs only at excluded positions.
        let mut g = frontier;
        for (i, &v) in shadowed.iter().enumerate() {
            if v >= g || shadowed[..i].contains(&v) {
                continue;
            }
            let occurrences = shadowed.iter().filter(|&&w| w == v).count() as u32;
            if counts[v as usize] == occurrences {
                g = v;
            }
        }

        values.push(Nimber(g));
        if g as usize >= counts.len() {
            counts.resize(g as usize + 1, 0);
        }
        counts[g as usize] += 1;
        while counts.get(frontier as usize).copied().unwrap_or(0) > 0 {
            frontier += 1;
        }
    }
    Ok(NimSequence::from_values(values, SequenceSource::Naive))
}

/// Literal definition, enumerating every option of every pile. Quadratic;
/// retained as the oracle the fast path is tested against.
pub fn grundy_prefix_literal(x: &FesSet, n_max: u64) -> Result<NimSequence, EngineError> {
    let n_max = check_cap(n_max, DEFAULT_PILE_CAP)?;
    let mut values: Vec<Nimber> = Vec::with_capacity(n_max + 1);
    let mut seen: Vec<bool> = Vec::new();
    for n in 0..=n_max as u64 {
        seen.clear();
        seen.resize(n as usize + 1, false);
        for m in 0..n {
            if !x.contains(n - m) {
                seen[values[m as usize].0 as usize] = true;
            }
        }
        let g = seen.iter().position(|&s| !s).unwrap() as u32;
        values.push(Nimber(g));
    }
    Ok(NimSequence::from_values(values, SequenceSource::NaiveLiteral))
}
