//! Boundary patterns and the automaton that proves arithmetic periodicity.
//!
//! After the first `k` placement iterations, a pile either has a value
//! (`G < k`, drawn as `*`) or does not (`G >= k`, drawn as `.`). Left of the
//! least unknown pile everything is starred; from `max(X)` piles past it
//! everything is blank. The width-`max(X)` window in between — the *boundary
//! pattern* — therefore captures the whole state of the run, and one
//! placement iteration is a deterministic map from pattern to pattern.
//! A repeated pattern closes a cycle: if the pattern of iteration
//! `k_start` (anchored at pile `a0`) recurs at iteration `k_repeat`
//! (anchored at `a1`), then `G(n + (a1 - a0)) = G(n) + (k_repeat - k_start)`
//! for every pile `n >= a0 + max(X)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::fes::FesEngine;
use crate::model::{ArithmeticPeriod, FesSet, NimSequence, PeriodStatus};

/// Star/blank window of width `max(X)` anchored at the least blank pile of
/// iteration `k`. Cell 0 is blank by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryPattern {
    k: u64,
    anchor: u64,
    width: u64,
    /// Bit `i` set = star at offset `i`, packed least offset first.
    cells: Vec<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundaryError {
    /// Width 0: the empty set has no boundary window.
    EmptySet,
}

impl fmt::Display for BoundaryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryError::EmptySet => write!(f, "empty FES set has boundary width 0"),
        }
    }
}

impl core::error::Error for BoundaryError {}

fn words_for(width: u64) -> usize {
    (width as usize).div_ceil(64)
}

impl BoundaryPattern {
    /// All-blank pattern of iteration 0: nothing is known before the first
    /// placement runs.
    pub fn initial(x: &FesSet) -> Result<Self, BoundaryError> {
        let width = x.width();
        if width == 0 {
            return Err(BoundaryError::EmptySet);
        }
        Ok(BoundaryPattern {
            k: 0,
            anchor: 0,
            width,
            cells: alloc::vec![0; words_for(width)],
        })
    }

    pub(crate) fn from_stars(
        k: u64,
        anchor: u64,
        stars: impl IntoIterator<Item = bool>,
    ) -> Self {
        let mut cells = Vec::new();
        let mut width = 0u64;
        for star in stars {
            let (w, b) = (width as usize / 64, width % 64);
            if w == cells.len() {
                cells.push(0);
            }
            if star {
                cells[w] |= 1 << b;
            }
            width += 1;
        }
        debug_assert!(width > 0 && cells[0] & 1 == 0, "cell 0 must be blank");
        BoundaryPattern { k, anchor, width, cells }
    }

    #[inline]
    pub fn k(&self) -> u64 {
        self.k
    }

    #[inline]
    pub fn anchor(&self) -> u64 {
        self.anchor
    }

    #[inline]
    pub fn width(&self) -> u64 {
        self.width
    }

    /// Star at window offset `i` (`i < width`).
    #[inline]
    pub fn star(&self, i: u64) -> bool {
        debug_assert!(i < self.width);
        self.cells[i as usize / 64] >> (i % 64) & 1 == 1
    }

    /// Star/blank state of an absolute pile: implicit star region below the
    /// anchor, the window itself, implicit blank region beyond it.
    pub fn pile_is_star(&self, pile: u64) -> bool {
        if pile < self.anchor {
            true
        } else if pile < self.anchor + self.width {
            self.star(pile - self.anchor)
        } else {
            false
        }
    }

    /// The packed cells, usable as a translation-invariant map key.
    #[inline]
    pub fn cells_key(&self) -> &[u64] {
        &self.cells
    }

    fn offsets_of_stars(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.width).filter(|&i| self.star(i))
    }
}

impl fmt::Display for BoundaryPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            f.write_str(if self.star(i) { "*" } else { "." })?;
        }
        Ok(())
    }
}

/// Boundary pattern of iteration `k`, extracted from a fresh placement run.
pub fn pattern_of(x: &FesSet, k: u64) -> Result<BoundaryPattern, BoundaryError> {
    if x.width() == 0 {
        return Err(BoundaryError::EmptySet);
    }
    let mut engine = FesEngine::new(x.clone());
    for _ in 0..k {
        engine.step();
    }
    engine.boundary_pattern()
}

/// Simulates one placement iteration directly on a pattern, returning the
/// successor pattern and how far the anchor advanced.
///
/// Reads only relative offsets, so the result is translation invariant, and
/// every pattern has exactly one successor.
pub fn boundary_step(x: &FesSet, pattern: &BoundaryPattern) -> (BoundaryPattern, u64) {
    let width = x.width();
    debug_assert_eq!(width, pattern.width(), "pattern width must match max(X)");
    let w = width as usize;
    // Offsets 0..=width relative to the anchor; beyond the window is blank.
    let mut ext = alloc::vec![false; w + 1];
    for i in 0..width {
        ext[i as usize] = pattern.star(i);
    }
    debug_assert!(!ext[0]);
    ext[0] = true;
    let mut placed: Vec<u64> = alloc::vec![0];
    for &xv in x.elements() {
        if ext[xv as usize] {
            continue;
        }
        if placed.iter().all(|&m| x.contains(xv - m)) {
            ext[xv as usize] = true;
            placed.push(xv);
        }
    }
    let delta = ext.iter().position(|&s| !s).unwrap_or(w + 1) as u64;
    let stars = (0..width).map(|i| {
        let off = delta + i;
        off <= width && ext[off as usize]
    });
    let next = BoundaryPattern::from_stars(pattern.k + 1, pattern.anchor + delta, stars);
    (next, delta)
}

/// A repeated boundary pattern: iterations `k_start` and `k_repeat` share
/// the same cells, anchored `period()` piles apart.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CycleReport {
    pub k_start: u64,
    pub k_repeat: u64,
    pub anchor_start: u64,
    pub anchor_repeat: u64,
    pub width: u64,
}

impl CycleReport {
    #[inline]
    pub fn period(&self) -> u64 {
        self.anchor_repeat - self.anchor_start
    }

    #[inline]
    pub fn saltus(&self) -> u64 {
        self.k_repeat - self.k_start
    }

    /// Piles at or beyond this bound are untouched by pre-cycle history, so
    /// the periodicity claim is sound from here without further inspection.
    #[inline]
    pub fn sound_preperiod(&self) -> u64 {
        self.anchor_start + self.width
    }

    /// The proved triple with the conservative preperiod bound.
    pub fn to_period(&self) -> ArithmeticPeriod {
        ArithmeticPeriod {
            preperiod: self.sound_preperiod(),
            period: self.period(),
            saltus: self.saltus(),
            status: PeriodStatus::ProvedByAutomaton,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DetectError {
    EmptySet,
    /// No repeat within the configured iteration budget. Unreachable when
    /// the budget is left at the pigeonhole default.
    KLimitExhausted { limit: u64 },
}

impl fmt::Display for DetectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetectError::EmptySet => write!(f, "empty FES set has boundary width 0"),
            DetectError::KLimitExhausted { limit } => {
                write!(f, "no repeated boundary pattern within {limit} iterations")
            }
        }
    }
}

impl core::error::Error for DetectError {}

/// Pigeonhole bound on distinct patterns: cell 0 is forced blank, leaving
/// `2^(width-1)` words, so a repeat must occur within that many steps.
pub fn default_k_limit(x: &FesSet) -> u64 {
    match x.width() {
        0 => 0,
        w if w >= 64 => u64::MAX,
        w => (1u64 << (w - 1)) + 1,
    }
}

/// Iterates [`boundary_step`] from the all-blank pattern until a pattern
/// repeats, keyed on cells alone (anchors only translate).
pub fn detect_period(x: &FesSet, k_limit: Option<u64>) -> Result<CycleReport, DetectError> {
    if x.width() == 0 {
        return Err(DetectError::EmptySet);
    }
    let limit = k_limit.unwrap_or_else(|| default_k_limit(x));
    let mut seen: BTreeMap<Vec<u64>, (u64, u64)> = BTreeMap::new();
    let mut pattern = BoundaryPattern::initial(x).expect("width checked");
    loop {
        if let Some(&(k_start, anchor_start)) = seen.get(pattern.cells_key()) {
            return Ok(CycleReport {
                k_start,
                k_repeat: pattern.k,
                anchor_start,
                anchor_repeat: pattern.anchor,
                width: x.width(),
            });
        }
        if pattern.k >= limit {
            return Err(DetectError::KLimitExhausted { limit });
        }
        seen.insert(pattern.cells_key().to_vec(), (pattern.k, pattern.anchor));
        pattern = boundary_step(x, &pattern).0;
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SequenceTooShort {
    pub required: u64,
    pub actual: u64,
}

impl fmt::Display for SequenceTooShort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sequence of {} values is too short, need {}",
            self.actual, self.required
        )
    }
}

impl core::error::Error for SequenceTooShort {}

/// Shrinks the sound preperiod bound of a cycle report to the minimal `n0`
/// by checking `G(n + p) = G(n) + s` on the concrete sequence below it.
pub fn tighten_preperiod(
    report: &CycleReport,
    seq: &NimSequence,
) -> Result<ArithmeticPeriod, SequenceTooShort> {
    let p = report.period();
    let s = report.saltus();
    let required = report.sound_preperiod() + p + 1;
    if (seq.len() as u64) < required {
        return Err(SequenceTooShort { required, actual: seq.len() as u64 });
    }
    let mut preperiod = 0u64;
    for n in 0..seq.len() - p as usize {
        let lhs = seq[n + p as usize].0 as u64;
        let rhs = seq[n].0 as u64 + s;
        if lhs != rhs {
            preperiod = n as u64 + 1;
        }
    }
    debug_assert!(preperiod <= report.sound_preperiod());
    Ok(ArithmeticPeriod {
        preperiod,
        period: p,
        saltus: s,
        status: PeriodStatus::ProvedByAutomaton,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TripleFormError {
    /// The set is not of the form `{a, b, a+b}`.
    NotTripleForm,
    /// `b = 2a` is outside the three-occurrence lemma.
    DoubledElement,
}

impl fmt::Display for TripleFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleFormError::NotTripleForm => write!(f, "set is not of the form {{a, b, a+b}}"),
            TripleFormError::DoubledElement => write!(f, "b = 2a is excluded"),
        }
    }
}

impl core::error::Error for TripleFormError {}

fn strict_triple_form(x: &FesSet) -> Result<(u64, u64), TripleFormError> {
    let (a, b) = x.triple_form().ok_or(TripleFormError::NotTripleForm)?;
    if b == 2 * a {
        return Err(TripleFormError::DoubledElement);
    }
    Ok((a, b))
}

/// One reconstructed step backwards: the pattern of iteration `k - 1`
/// together with the three piles whose value is `k - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reconstruction {
    pub pattern: BoundaryPattern,
    pub piles: [u64; 3],
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReconstructError {
    TripleForm(TripleFormError),
    /// Iteration 0 has no predecessor.
    AtInitial,
    /// The pattern cannot have arisen from a run on this set.
    Inconsistent,
}

impl fmt::Display for ReconstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconstructError::TripleForm(e) => e.fmt(f),
            ReconstructError::AtInitial => write!(f, "iteration 0 has no predecessor"),
            ReconstructError::Inconsistent => write!(f, "pattern is not reachable for this set"),
        }
    }
}

impl core::error::Error for ReconstructError {}

impl From<TripleFormError> for ReconstructError {
    fn from(e: TripleFormError) -> Self {
        ReconstructError::TripleForm(e)
    }
}

/// Inverts one step for `X = {a, b, a+b}`: every value occurs exactly three
/// times, the last star of the window is the third occurrence of `k - 1`,
/// and the middle occurrence sits at `+a` or `+b` past the first — at `+b`
/// whenever both are starred.
pub fn reconstruct_previous(
    x: &FesSet,
    pattern: &BoundaryPattern,
) -> Result<Reconstruction, ReconstructError> {
    let (a, b) = strict_triple_form(x)?;
    if pattern.k == 0 {
        return Err(ReconstructError::AtInitial);
    }
    let last_star = pattern
        .offsets_of_stars()
        .last()
        .map(|off| pattern.anchor + off)
        .or_else(|| pattern.anchor.checked_sub(1));
    let third = last_star.ok_or(ReconstructError::Inconsistent)?;
    let first = third.checked_sub(a + b).ok_or(ReconstructError::Inconsistent)?;
    let at_a = pattern.pile_is_star(first + a);
    let at_b = pattern.pile_is_star(first + b);
    let middle = match (at_a, at_b) {
        (true, true) | (false, true) => first + b,
        (true, false) => first + a,
        (false, false) => return Err(ReconstructError::Inconsistent),
    };
    let removed = [first, middle, third];
    let stars = (0..pattern.width).map(|i| {
        let pile = first + i;
        pattern.pile_is_star(pile) && !removed.contains(&pile)
    });
    Ok(Reconstruction {
        pattern: BoundaryPattern::from_stars(pattern.k - 1, first, stars),
        piles: removed,
    })
}

/// First iteration where reconstructing backwards does not return the
/// pattern the run actually had.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RoundtripFailure {
    pub k: u64,
}

/// Checks `reconstruct_previous` against a stored placement trajectory for
/// every `1 <= k <= k_max`.
pub fn reconstruction_roundtrip(x: &FesSet, k_max: u64) -> Result<(), RoundtripFailure> {
    let mut engine = FesEngine::new(x.clone());
    let mut previous = engine.boundary_pattern().expect("nonempty set");
    for k in 1..=k_max {
        engine.step();
        let current = engine.boundary_pattern().expect("nonempty set");
        match reconstruct_previous(x, &current) {
            Ok(r) if r.pattern == previous => previous = current,
            _ => return Err(RoundtripFailure { k }),
        }
    }
    Ok(())
}

/// In-degree census over the reachable pattern graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusReport {
    /// Patterns reachable from the initial all-blank pattern, in first-visit
    /// order, with the number of predecessors each has inside that set.
    pub entries: Vec<(BoundaryPattern, u64)>,
    pub all_indegree_one: bool,
    pub cycle: CycleReport,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CensusError {
    TripleForm(TripleFormError),
    KLimitExhausted { limit: u64 },
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::TripleForm(e) => e.fmt(f),
            CensusError::KLimitExhausted { limit } => {
                write!(f, "no repeated boundary pattern within {limit} iterations")
            }
        }
    }
}

impl core::error::Error for CensusError {}

impl From<TripleFormError> for CensusError {
    fn from(e: TripleFormError) -> Self {
        CensusError::TripleForm(e)
    }
}

/// Walks the trajectory until the first repeat and counts predecessors of
/// each reachable pattern. In-degree exactly 1 everywhere means the
/// trajectory is a pure cycle, re-entering at the initial pattern.
pub fn indegree_census(x: &FesSet, k_limit: Option<u64>) -> Result<CensusReport, CensusError> {
    strict_triple_form(x)?;
    let limit = k_limit.unwrap_or_else(|| default_k_limit(x));
    let mut seen: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    let mut trajectory: Vec<BoundaryPattern> = Vec::new();
    let mut pattern = BoundaryPattern::initial(x).expect("nonempty set");
    let entry = loop {
        if let Some(&idx) = seen.get(pattern.cells_key()) {
            break idx;
        }
        if pattern.k >= limit {
            return Err(CensusError::KLimitExhausted { limit });
        }
        seen.insert(pattern.cells_key().to_vec(), trajectory.len());
        trajectory.push(pattern.clone());
        pattern = boundary_step(x, &pattern).0;
    };
    let cycle = CycleReport {
        k_start: trajectory[entry].k,
        k_repeat: pattern.k,
        anchor_start: trajectory[entry].anchor,
        anchor_repeat: pattern.anchor,
        width: x.width(),
    };
    let mut indegrees = alloc::vec![0u64; trajectory.len()];
    for d in indegrees.iter_mut().skip(1) {
        *d += 1;
    }
    indegrees[entry] += 1;
    let all_indegree_one = indegrees.iter().all(|&d| d == 1);
    let entries = trajectory.into_iter().zip(indegrees).collect();
    Ok(CensusReport { entries, all_indegree_one, cycle })
}
