//! Shared domain types: FES sets, nimbers, nim sequences, period triples,
//! and the Sprague-Grundy sum utilities.

use alloc::vec::Vec;
use core::fmt;
use core::ops::BitXor;

/// A Grundy value (nimber).
///
/// Values in a stored sequence satisfy `G(n) <= n`, so `u32` is enough for
/// any prefix that fits in memory; pile sizes themselves are `u64`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Nimber(pub u32);

impl Nimber {
    pub const ZERO: Nimber = Nimber(0);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Nimber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Nimber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "*{}", self.0)
    }
}

impl From<u32> for Nimber {
    fn from(v: u32) -> Self {
        Nimber(v)
    }
}

impl BitXor for Nimber {
    type Output = Nimber;

    fn bitxor(self, rhs: Nimber) -> Nimber {
        Nimber(self.0 ^ rhs.0)
    }
}

/// The finite excluded subtraction set `X`: a move removes any positive
/// amount *not* in `X`. Elements are kept strictly increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FesSet {
    elements: Vec<u64>,
}

/// Rejected input to [`FesSet::new`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FesSetError {
    /// Elements are counts of counters, so they must be at least 1.
    NonPositive(i64),
    Duplicate(u64),
    Unparseable,
}

impl fmt::Display for FesSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FesSetError::NonPositive(v) => write!(f, "excluded amount must be positive, got {v}"),
            FesSetError::Duplicate(v) => write!(f, "duplicate excluded amount {v}"),
            FesSetError::Unparseable => write!(f, "expected a comma-separated list of integers"),
        }
    }
}

impl core::error::Error for FesSetError {}

impl FesSet {
    /// Validates and normalizes a raw element list. Sorting is fine,
    /// duplicates and non-positive entries are not.
    pub fn new(raw: &[i64]) -> Result<Self, FesSetError> {
        let mut elements = Vec::with_capacity(raw.len());
        for &v in raw {
            if v <= 0 {
                return Err(FesSetError::NonPositive(v));
            }
            elements.push(v as u64);
        }
        elements.sort_unstable();
        for pair in elements.windows(2) {
            if pair[0] == pair[1] {
                return Err(FesSetError::Duplicate(pair[0]));
            }
        }
        Ok(FesSet { elements })
    }

    /// The empty set: the game "remove any positive number", `G(n) = n`.
    pub fn empty() -> Self {
        FesSet { elements: Vec::new() }
    }

    /// Parses a comma-separated list such as `"2,3,6,8"`. The empty string
    /// (or all whitespace) is the empty set.
    pub fn parse(s: &str) -> Result<Self, FesSetError> {
        let mut raw = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let v: i64 = part.parse().map_err(|_| FesSetError::Unparseable)?;
            raw.push(v);
        }
        FesSet::new(&raw)
    }

    #[inline]
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Largest excluded amount, if any.
    #[inline]
    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    /// Boundary window length: `max(X)`, or 0 for the empty set.
    #[inline]
    pub fn width(&self) -> u64 {
        self.max().unwrap_or(0)
    }

    #[inline]
    pub fn contains(&self, amount: u64) -> bool {
        self.elements.binary_search(&amount).is_ok()
    }

    /// `Some((a, b))` when the set is exactly `{a, b, a+b}` with `a < b`.
    pub fn triple_form(&self) -> Option<(u64, u64)> {
        match self.elements.as_slice() {
            [a, b, c] if a + b == *c => Some((*a, *b)),
            _ => None,
        }
    }
}

impl fmt::Display for FesSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Which route produced a [`NimSequence`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SequenceSource {
    /// Counts-based mex engine.
    Naive,
    /// Literal mex-over-options evaluator (the in-repo oracle).
    NaiveLiteral,
    /// FES placement engine.
    Fes,
    /// Constructed by the caller, e.g. synthetic test input.
    External,
}

/// A computed prefix `G(0), G(1), ..., G(n)` of the nim sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NimSequence {
    values: Vec<Nimber>,
    source: SequenceSource,
}

impl NimSequence {
    pub fn from_values(values: Vec<Nimber>, source: SequenceSource) -> Self {
        debug_assert!(values
            .iter()
            .enumerate()
            .all(|(n, g)| (g.0 as usize) <= n));
        NimSequence { values, source }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn values(&self) -> &[Nimber] {
        &self.values
    }

    #[inline]
    pub fn source(&self) -> SequenceSource {
        self.source
    }

    #[inline]
    pub fn get(&self, pile: u64) -> Option<Nimber> {
        usize::try_from(pile).ok().and_then(|i| self.values.get(i)).copied()
    }
}

impl core::ops::Index<usize> for NimSequence {
    type Output = Nimber;

    fn index(&self, pile: usize) -> &Nimber {
        &self.values[pile]
    }
}

/// How strongly an [`ArithmeticPeriod`] claim is backed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PeriodStatus {
    /// Derived from a repeated boundary pattern; holds for all `n >= n0`.
    ProvedByAutomaton,
    /// Checked against a finite computed prefix only.
    VerifiedOnPrefix,
    /// Proposed but not yet verified.
    Candidate,
}

impl PeriodStatus {
    pub fn label(self) -> &'static str {
        match self {
            PeriodStatus::ProvedByAutomaton => "proved-by-automaton",
            PeriodStatus::VerifiedOnPrefix => "verified-on-prefix",
            PeriodStatus::Candidate => "candidate",
        }
    }
}

/// An arithmetic-periodicity triple: `G(n + period) = G(n) + saltus` for all
/// `n >= preperiod`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ArithmeticPeriod {
    pub preperiod: u64,
    pub period: u64,
    pub saltus: u64,
    pub status: PeriodStatus,
}

impl ArithmeticPeriod {
    /// Purely arithmetic periodic: the relation holds from pile 0 on.
    #[inline]
    pub fn is_pure(&self) -> bool {
        self.preperiod == 0
    }

    pub fn triple(&self) -> (u64, u64, u64) {
        (self.preperiod, self.period, self.saltus)
    }
}

impl fmt::Display for ArithmeticPeriod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n0={} p={} s={} ({})",
            self.preperiod,
            self.period,
            self.saltus,
            self.status.label()
        )
    }
}

/// A pile index fell outside the computed prefix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OutOfRange {
    pub pile: u64,
    pub computed: u64,
}

impl fmt::Display for OutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pile {} outside the computed prefix of {} values",
            self.pile, self.computed
        )
    }
}

impl core::error::Error for OutOfRange {}

/// Nimber of a disjunctive sum of heaps: the XOR of the component nimbers.
pub fn sum_nimber(heaps: &[u64], seq: &NimSequence) -> Result<Nimber, OutOfRange> {
    let mut acc = Nimber::ZERO;
    for &h in heaps {
        let g = seq.get(h).ok_or(OutOfRange {
            pile: h,
            computed: seq.len() as u64,
        })?;
        acc = acc ^ g;
    }
    Ok(acc)
}

/// Result of [`optimal_move`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveOutcome {
    /// Remove `take` counters from `heaps[heap]`, leaving `leaves`; the
    /// resulting position has nimber 0.
    Move { heap: usize, take: u64, leaves: u64 },
    /// Nimber 0 already: every move hands the opponent a win.
    LosingPosition,
}

/// Finds a move to a zero-XOR position, or reports that none exists.
///
/// Deterministic: heaps are tried in order and the smallest legal removal
/// wins within a heap.
pub fn optimal_move(
    heaps: &[u64],
    seq: &NimSequence,
    x: &FesSet,
) -> Result<MoveOutcome, OutOfRange> {
    let total = sum_nimber(heaps, seq)?;
    if total == Nimber::ZERO {
        return Ok(MoveOutcome::LosingPosition);
    }
    for (i, &h) in heaps.iter().enumerate() {
        let target = total ^ seq.get(h).expect("checked by sum_nimber");
        // Smallest removal first: scan destination piles from the top.
        let mut m = h;
        while m > 0 {
            m -= 1;
            let take = h - m;
            if seq.get(m) == Some(target) && !x.contains(take) {
                return Ok(MoveOutcome::Move {
                    heap: i,
                    take,
                    leaves: m,
                });
            }
        }
    }
    // Sprague-Grundy theory guarantees a zeroing move whenever the XOR is
    // nonzero and every heap's options are in range.
    unreachable!("nonzero position without a zeroing move")
}
