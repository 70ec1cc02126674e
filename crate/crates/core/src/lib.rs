//! Nim sequences of *all-but* subtraction games.
//!
//! An all-but subtraction game is played on a heap of counters where a move
//! removes any number of counters **except** an amount listed in a finite
//! excluded set `X` (the FES set). This crate computes the Grundy values
//! `G(0), G(1), ...` of such games and analyzes their arithmetic periodicity
//! (`G(n + p) = G(n) + s` for all `n >= n0`).
//!
//! Two independent engines produce the sequence:
//!
//! * [`naive::grundy_prefix`] applies the mex definition directly, with an
//!   occurrence-count shortcut that exploits the cofinite move set.
//! * [`fes::fes_prefix`] places the positions of each nimber `k = 0, 1, 2, ...`
//!   in turn, using only membership tests against `X`.
//!
//! The frontier of knowledge after each placement round is a star/blank word
//! of width `max(X)` — the *boundary pattern*. Stepping patterns is a
//! deterministic finite map, so a repeated pattern proves arithmetic
//! periodicity outright; see [`boundary::detect_period`]. An automaton-free
//! scan over a computed prefix ([`periodicity::brute_min_period`]) serves as
//! the independent cross-check, and [`verify`] packages executable checks for
//! the structural facts these games satisfy (reduction identities, the
//! three-occurrence property of `{a, b, a+b}` sets, period = 3 × saltus, and
//! period scaling).
//!
//! The crate is `no_std` (requires `alloc`); all operations are pure
//! functions over immutable values and safe to run from many threads.
//!
//! ```
//! use allbut_core::{boundary, naive, FesSet, Nimber};
//!
//! let x = FesSet::parse("1,3,4")?;
//! let seq = naive::grundy_prefix(&x, 20)?;
//! assert_eq!(seq.get(4), Some(Nimber(0)));
//!
//! let cycle = boundary::detect_period(&x, None)?;
//! assert_eq!((cycle.period(), cycle.saltus()), (12, 4));
//! # Ok::<_, Box<dyn core::error::Error>>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boundary;
pub mod fes;
pub mod model;
pub mod naive;
pub mod periodicity;
pub mod verify;

pub use boundary::{detect_period, tighten_preperiod, BoundaryPattern, CycleReport};
pub use fes::{FesEngine, PlacementRecord};
pub use model::{ArithmeticPeriod, FesSet, NimSequence, Nimber, PeriodStatus};
