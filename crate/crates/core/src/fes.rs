//! The FES placement engine.
//!
//! Instead of evaluating mex sets, iteration `k` finds every pile whose
//! Grundy value is `k`: the least unknown pile `n` gets `k`, and each `n + x`
//! for `x` in `X` (in increasing order) gets `k` exactly when it is still
//! unknown and its distance to every pile already holding `k` is excluded.
//! Activity never reaches past `frontier + max(X)`, so the engine keeps a
//! complete prefix plus a `max(X) + 1` window of tentatively assigned piles.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::boundary::{BoundaryError, BoundaryPattern};
use crate::model::{FesSet, NimSequence, Nimber, SequenceSource};
use crate::naive::{check_cap, EngineError, DEFAULT_PILE_CAP};

/// The piles assigned value `k` during iteration `k`, in assignment order.
/// `positions[0]` is the iteration's least unknown pile; every later entry
/// is `positions[0] + x` for some `x` in `X`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlacementRecord {
    pub k: Nimber,
    pub positions: Vec<u64>,
}

/// Incremental FES run over one set `X`.
pub struct FesEngine {
    x: FesSet,
    /// Complete prefix: piles `[0, frontier)`, all values certain.
    values: Vec<Nimber>,
    /// Piles `[frontier, frontier + width]`; `None` = still unknown.
    ahead: VecDeque<Option<Nimber>>,
    next_k: u32,
}

impl FesEngine {
    pub fn new(x: FesSet) -> Self {
        let window = x.width() as usize + 1;
        FesEngine {
            x,
            values: Vec::new(),
            ahead: VecDeque::from(alloc::vec![None; window]),
            next_k: 0,
        }
    }

    #[inline]
    pub fn x(&self) -> &FesSet {
        &self.x
    }

    /// The iteration the next [`step`](Self::step) will run.
    #[inline]
    pub fn next_k(&self) -> u32 {
        self.next_k
    }

    /// Least pile whose value is still unknown.
    #[inline]
    pub fn frontier(&self) -> u64 {
        self.values.len() as u64
    }

    /// The certain contiguous prefix `G(0 .. frontier)`.
    #[inline]
    pub fn certain(&self) -> &[Nimber] {
        &self.values
    }

    /// Assigned piles beyond the frontier (debug view; these values are
    /// final but the piles between them are not yet decided).
    pub fn assigned_ahead(&self) -> Vec<(u64, Nimber)> {
        let frontier = self.frontier();
        self.ahead
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|g| (frontier + i as u64, g)))
            .collect()
    }

    /// Boundary pattern of the current frontier: the width-`max(X)` window
    /// at the least unknown pile, star = value already known (G < next_k).
    pub fn boundary_pattern(&self) -> Result<BoundaryPattern, BoundaryError> {
        let width = self.x.width();
        if width == 0 {
            return Err(BoundaryError::EmptySet);
        }
        debug_assert!(self.ahead[0].is_none());
        // Everything at or beyond frontier + width must still be blank.
        assert!(
            self.ahead[width as usize].is_none(),
            "assigned pile beyond the boundary window"
        );
        let stars = (0..width).map(|i| self.ahead[i as usize].is_some());
        Ok(BoundaryPattern::from_stars(
            u64::from(self.next_k),
            self.frontier(),
            stars,
        ))
    }

    /// Runs one iteration: places `next_k` everywhere it belongs.
    pub fn step(&mut self) -> PlacementRecord {
        let k = Nimber(self.next_k);
        let n = self.frontier();
        debug_assert!(self.ahead[0].is_none());
        self.ahead[0] = Some(k);
        let mut positions = Vec::with_capacity(self.x.len() + 1);
        positions.push(n);

        for &xv in self.x.elements() {
            let idx = xv as usize;
            if self.ahead[idx].is_some() {
                continue;
            }
            let candidate = n + xv;
            if positions.iter().all(|&m| self.x.contains(candidate - m)) {
                self.ahead[idx] = Some(k);
                positions.push(candidate);
            }
        }

        // Slide the window up to the new least unknown pile.
        while let Some(Some(g)) = self.ahead.front() {
            self.values.push(*g);
            self.ahead.pop_front();
            self.ahead.push_back(None);
        }

        self.next_k += 1;
        PlacementRecord { k, positions }
    }
}

/// Runs iterations `0..=k_max` and returns the certain prefix together with
/// every placement record.
pub fn fes_prefix(
    x: &FesSet,
    k_max: u32,
) -> Result<(NimSequence, Vec<PlacementRecord>), EngineError> {
    fes_prefix_with_cap(x, k_max, DEFAULT_PILE_CAP)
}

pub fn fes_prefix_with_cap(
    x: &FesSet,
    k_max: u32,
    cap: u64,
) -> Result<(NimSequence, Vec<PlacementRecord>), EngineError> {
    // Each iteration advances the frontier by at least one pile and at most
    // max(X) + 1, so the prefix length is capped alongside the iterations.
    check_cap(u64::from(k_max), cap)?;
    let mut engine = FesEngine::new(x.clone());
    let mut records = Vec::with_capacity(k_max as usize + 1);
    for _ in 0..=k_max {
        records.push(engine.step());
        check_cap(engine.frontier(), cap)?;
    }
    let seq = NimSequence::from_values(engine.values, SequenceSource::Fes);
    Ok((seq, records))
}

/// `G(0..=n_max)` by running iterations until the frontier passes `n_max`.
pub fn grundy_prefix(x: &FesSet, n_max: u64) -> Result<NimSequence, EngineError> {
    grundy_prefix_with_cap(x, n_max, DEFAULT_PILE_CAP)
}

pub fn grundy_prefix_with_cap(
    x: &FesSet,
    n_max: u64,
    cap: u64,
) -> Result<NimSequence, EngineError> {
    let n_max = check_cap(n_max, cap)?;
    let mut engine = FesEngine::new(x.clone());
    while engine.values.len() <= n_max {
        engine.step();
    }
    let mut values = engine.values;
    values.truncate(n_max + 1);
    Ok(NimSequence::from_values(values, SequenceSource::Fes))
}
