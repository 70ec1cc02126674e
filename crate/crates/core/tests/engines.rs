//! Cross-checks between the three sequence routes: the counts-based engine,
//! the literal mex evaluator, the placement engine, and a direct win/loss
//! game-tree search.

use allbut_core::model::{optimal_move, sum_nimber, FesSet, MoveOutcome, NimSequence, Nimber};
use allbut_core::{fes, naive};
use proptest::prelude::*;

fn set(elements: &[i64]) -> FesSet {
    FesSet::new(elements).unwrap()
}

fn values(seq: &NimSequence) -> Vec<u32> {
    seq.values().iter().map(|g| g.0).collect()
}

/// Strategy: a FES set with at most `size` elements, all at most `max`.
fn fes_sets(size: usize, max: u64) -> impl Strategy<Value = FesSet> {
    prop::collection::btree_set(1..=max as i64, 0..=size)
        .prop_map(|s| FesSet::new(&s.into_iter().collect::<Vec<_>>()).unwrap())
}

proptest! {
    /// The counts shortcut is bit-for-bit the literal mex definition.
    #[test]
    fn fast_engine_matches_literal(x in fes_sets(4, 24)) {
        let fast = naive::grundy_prefix(&x, 200).unwrap();
        let literal = naive::grundy_prefix_literal(&x, 200).unwrap();
        prop_assert_eq!(fast.values(), literal.values());
    }

    /// The placement engine agrees with the mex engine on long prefixes.
    #[test]
    fn fes_engine_matches_naive(x in fes_sets(4, 24)) {
        let a = naive::grundy_prefix(&x, 5000).unwrap();
        let b = fes::grundy_prefix(&x, 5000).unwrap();
        prop_assert_eq!(a.values(), b.values());
    }

    /// XOR-sum algebra: order never matters and nimber-0 heaps are inert.
    #[test]
    fn sum_nimber_algebra(
        heaps in prop::collection::vec(0u64..=60, 0..=5),
        x in fes_sets(3, 12),
    ) {
        let seq = naive::grundy_prefix(&x, 60).unwrap();
        let total = sum_nimber(&heaps, &seq).unwrap();
        let mut rev = heaps.clone();
        rev.reverse();
        prop_assert_eq!(sum_nimber(&rev, &seq).unwrap(), total);
        // Splitting arbitrarily and XOR-combining is the same sum.
        let (left, right) = heaps.split_at(heaps.len() / 2);
        let combined = sum_nimber(left, &seq).unwrap() ^ sum_nimber(right, &seq).unwrap();
        prop_assert_eq!(combined, total);
        if let Some(zero) = seq.values().iter().position(|g| *g == Nimber::ZERO) {
            let mut extended = heaps.clone();
            extended.push(zero as u64);
            prop_assert_eq!(sum_nimber(&extended, &seq).unwrap(), total);
        }
    }
}

/// Win/loss game-tree search: a pile is a previous-player win exactly when
/// its Grundy value is 0.
fn p_positions(x: &FesSet, n_max: u64) -> Vec<bool> {
    let mut p: Vec<bool> = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let losing = (0..n).all(|m| x.contains(n - m) || !p[m as usize]);
        p.push(losing);
    }
    p
}

#[test]
fn zero_values_are_exactly_p_positions() {
    for x in [set(&[]), set(&[1]), set(&[2, 3, 6, 8]), set(&[1, 3, 4]), set(&[2, 5, 7, 11])] {
        let seq = naive::grundy_prefix(&x, 60).unwrap();
        let p = p_positions(&x, 60);
        for n in 0..=60usize {
            assert_eq!(seq[n] == Nimber::ZERO, p[n], "X={x} n={n}");
        }
    }
}

#[test]
fn first_occurrences_appear_in_order() {
    for x in [set(&[1]), set(&[2, 3, 6, 8]), set(&[1, 3, 4]), set(&[3, 7, 10]), set(&[2, 5, 9, 12])] {
        let seq = naive::grundy_prefix(&x, 3000).unwrap();
        let mut firsts = Vec::new();
        for (n, g) in seq.values().iter().enumerate() {
            if g.0 as usize >= firsts.len() {
                assert_eq!(g.0 as usize, firsts.len(), "X={x}: value skipped at pile {n}");
                firsts.push(n);
            }
        }
        assert!(firsts.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn occurrences_stay_within_one_window_of_the_first() {
    for x in [set(&[2, 3, 6, 8]), set(&[1, 3, 4]), set(&[2, 5, 9, 12])] {
        let width = x.width() as usize;
        let seq = naive::grundy_prefix(&x, 3000).unwrap();
        let mut first = vec![usize::MAX; 3001];
        for (n, g) in seq.values().iter().enumerate() {
            let v = g.0 as usize;
            if first[v] == usize::MAX {
                first[v] = n;
            } else {
                // Values this close to the end may still gain occurrences.
                if first[v] + width <= 3000 {
                    assert!(n <= first[v] + width, "X={x} value {v} at {n}, first {}", first[v]);
                }
            }
        }
    }
}

/// After iteration k the assigned piles are exactly the ones whose Grundy
/// value (per the independent engine) is at most k.
#[test]
fn placement_rounds_fill_values_in_order() {
    for x in [set(&[2, 3, 6, 8]), set(&[1, 3, 4]), set(&[2, 5, 9, 12])] {
        let oracle = naive::grundy_prefix(&x, 4000).unwrap();
        let mut engine = fes::FesEngine::new(x.clone());
        let mut assigned: Vec<u64> = Vec::new();
        for k in 0..40u32 {
            let record = engine.step();
            assert_eq!(record.k, Nimber(k));
            assigned.extend(&record.positions);
            let max_assigned = *assigned.iter().max().unwrap();
            let mut expect: Vec<u64> = (0..=max_assigned)
                .filter(|&m| oracle[m as usize].0 <= k)
                .collect();
            expect.sort_unstable();
            let mut got = assigned.clone();
            got.sort_unstable();
            assert_eq!(got, expect, "X={x} k={k}");
        }
        // Certain prefix and ahead values all match the oracle.
        for (n, g) in engine.certain().iter().enumerate() {
            assert_eq!(*g, oracle[n]);
        }
        for (pile, g) in engine.assigned_ahead() {
            assert_eq!(g, oracle[pile as usize]);
        }
    }
}

/// Enumerates all heap lists (up to 3 heaps) with a given total.
fn positions_with_total(total: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for h0 in 0..=total {
        out.push(vec![h0]);
        for h1 in 0..=total - h0 {
            out.push(vec![h0, h1]);
            for h2 in 0..=total - h0 - h1 {
                out.push(vec![h0, h1, h2]);
            }
        }
    }
    out
}

#[test]
fn advised_moves_are_sound_and_complete() {
    for x in [set(&[1]), set(&[2, 3]), set(&[1, 3, 4])] {
        let seq = naive::grundy_prefix(&x, 20).unwrap();
        for total in 0..=20u64 {
            for heaps in positions_with_total(total) {
                match optimal_move(&heaps, &seq, &x).unwrap() {
                    MoveOutcome::Move { heap, take, leaves } => {
                        assert!(take >= 1 && !x.contains(take));
                        assert_eq!(heaps[heap] - take, leaves);
                        let mut next = heaps.clone();
                        next[heap] = leaves;
                        assert_eq!(sum_nimber(&next, &seq).unwrap(), Nimber::ZERO);
                    }
                    MoveOutcome::LosingPosition => {
                        // Every legal move must hand back a nonzero position.
                        for (i, &h) in heaps.iter().enumerate() {
                            for m in 0..h {
                                if x.contains(h - m) {
                                    continue;
                                }
                                let mut next = heaps.clone();
                                next[i] = m;
                                assert_ne!(
                                    sum_nimber(&next, &seq).unwrap(),
                                    Nimber::ZERO,
                                    "X={x} heaps={heaps:?} move {i}:{m}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn certain_prefix_has_no_holes() {
    let x = set(&[2, 3, 6, 8]);
    let (seq, _) = fes::fes_prefix(&x, 5).unwrap();
    assert_eq!(
        values(&seq),
        vec![0, 1, 0, 1, 2, 3, 2, 3, 0, 1, 4, 5, 2, 3, 5]
    );
}

#[test]
fn fes_places_first_triple_of_zeros() {
    let x = set(&[1, 3, 4]);
    let (_, records) = fes::fes_prefix(&x, 2).unwrap();
    assert_eq!(records[0].positions, vec![0, 1, 4]);
}
