//! Property tests for the model and counting layers.

use std::collections::BTreeSet;

use proptest::prelude::*;

use bachet_core::counting::MemoTable;
use bachet_core::model::{
    bounds_check, bounds_ok, min_parts, reachable_loads, span_of, Partition, RangeBounds,
};
use bachet_core::t;

/// Nondecreasing positive weight tuples, small enough that the set-based
/// reference below stays cheap.
fn weight_tuples() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(1u64..40, 1..7).prop_map(|mut ws| {
        ws.sort_unstable();
        ws
    })
}

/// Set-based reference for signed-sum reachability, independent of the
/// bitset implementation under test.
fn reachable_reference(ws: &[u64]) -> BTreeSet<u64> {
    let mut sums = BTreeSet::from([0i64]);
    for &w in ws {
        let prev: Vec<i64> = sums.iter().copied().collect();
        for v in prev {
            sums.insert(v + w as i64);
            sums.insert(v - w as i64);
        }
    }
    sums.into_iter().filter(|&v| v > 0).map(|v| v as u64).collect()
}

proptest! {
    #[test]
    fn bitset_reachability_matches_set_expansion(ws in weight_tuples()) {
        let p = Partition::new(ws.clone()).unwrap();
        prop_assert_eq!(reachable_loads(&p), reachable_reference(&ws));
    }

    #[test]
    fn prefix_sums_telescope(ws in weight_tuples()) {
        let p = Partition::new(ws.clone()).unwrap();
        let rs = p.prefix_sums();
        let v = rs.values();
        prop_assert_eq!(v[0], 0);
        for (i, &w) in ws.iter().enumerate() {
            prop_assert_eq!(v[i + 1], v[i] + w);
        }
        prop_assert_eq!(rs.total(), p.total());
    }

    #[test]
    fn bounds_check_reports_first_violation(ws in weight_tuples()) {
        let p = Partition::new(ws.clone()).unwrap();
        // recompute the first violation naively
        let mut expect = None;
        if ws[0] != 1 {
            expect = Some(0usize);
        } else {
            let mut r = 0u64;
            for (i, &w) in ws.iter().enumerate() {
                if w > 2 * r + 1 {
                    expect = Some(i);
                    break;
                }
                r += w;
            }
        }
        match (bounds_check(&p), expect) {
            (Ok(()), None) => prop_assert!(bounds_ok(&p)),
            (Err(v), Some(i)) => {
                prop_assert!(!bounds_ok(&p));
                let idx = match v {
                    bachet_core::BoundsViolation::FirstWeightNotOne { .. } => 0,
                    bachet_core::BoundsViolation::AbovePrefixBound { index, .. } => index - 1,
                };
                prop_assert_eq!(idx, i);
            }
            (got, want) => prop_assert!(false, "mismatch: {:?} vs {:?}", got, want),
        }
    }

    #[test]
    fn display_round_trips(ws in weight_tuples()) {
        let p = Partition::new(ws.clone()).unwrap();
        let back: Vec<u64> = p
            .to_string()
            .split_whitespace()
            .map(|tok| tok.parse().unwrap())
            .collect();
        prop_assert_eq!(back, ws);
    }

    #[test]
    fn range_len_matches_iteration(lo in 0u64..50, hi in 0u64..50) {
        let r = RangeBounds::new(lo, hi);
        prop_assert_eq!(r.len(), r.iter().count() as u64);
        prop_assert_eq!(r.is_empty(), r.iter().next().is_none());
    }

    #[test]
    fn memo_prefix_is_stable_under_larger_fills(n in 2u64..300, extra in 1u64..100) {
        // computing further never changes earlier values
        let small = t(n);
        let mut memo = MemoTable::new();
        memo.ensure(n + extra);
        prop_assert_eq!(memo.get(n).unwrap(), &small);
    }

    #[test]
    fn span_brackets_its_n(n in 2u64..100_000u64) {
        let sc = span_of(n).unwrap();
        prop_assert!(sc.n_lo <= n && n <= sc.n_hi);
        prop_assert_eq!(sc.m, min_parts(n).unwrap());
    }
}
