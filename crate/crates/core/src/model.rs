//! Domain types and the closed-form feasibility bounds.
//!
//! A partition `w_1 <= ... <= w_m` of `n` is *feasible* when every load
//! `1..=n` can be weighed in one weighing on a two-pan balance: weights may
//! sit on either pan, so a load `k` is weighable iff `k = sum(u_i * w_i)`
//! for some signs `u_i` in `{-1, 0, +1}`. All arithmetic here is exact
//! integer arithmetic; span boundaries sit exactly where floating-point
//! logarithms go wrong.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::error::Error as CrateError;

/// 3^k, exact. Panics if the result does not fit in a `u64` (k > 40).
pub fn pow3(k: u32) -> u64 {
    assert!(k <= 40, "3^{k} does not fit in u64");
    3u64.pow(k)
}

/// A nondecreasing list of positive weights; the sum of the parts is the
/// `n` the partition claims to weigh.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    weights: Vec<u64>,
}

impl Partition {
    /// Validates nonempty, positive, and nondecreasing.
    pub fn new(weights: Vec<u64>) -> Result<Self, CrateError> {
        if weights.is_empty() {
            return Err(CrateError::EmptyPartition);
        }
        let mut prev = 0u64;
        for (i, &w) in weights.iter().enumerate() {
            if w == 0 {
                return Err(CrateError::ZeroWeight { index: i + 1 });
            }
            if w < prev {
                return Err(CrateError::NotNondecreasing {
                    index: i + 1,
                    weight: w,
                    prev,
                });
            }
            prev = w;
        }
        Ok(Self { weights })
    }

    /// For enumeration paths that produce sorted positive tuples by
    /// construction.
    pub(crate) fn from_sorted_unchecked(weights: Vec<u64>) -> Self {
        debug_assert!(!weights.is_empty());
        debug_assert!(weights.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(weights[0] >= 1);
        Self { weights }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// The n this partition splits: the sum of all parts.
    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn prefix_sums(&self) -> PrefixSums {
        PrefixSums::of(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for w in &self.weights {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{w}")?;
            first = false;
        }
        Ok(())
    }
}

/// Running sums `R_0..R_m` of a partition, with `R_0 = 0` and `R_m = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixSums {
    values: Vec<u64>,
}

impl PrefixSums {
    pub fn of(p: &Partition) -> Self {
        let mut values = Vec::with_capacity(p.len() + 1);
        values.push(0);
        let mut acc = 0u64;
        for &w in p.weights() {
            acc += w;
            values.push(acc);
        }
        Self { values }
    }

    /// `R_0..R_m` including both endpoints.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `R_m`, the full sum.
    pub fn total(&self) -> u64 {
        *self.values.last().expect("R_0 always present")
    }

    /// `R_{m-1}`, the sum of all but the heaviest part.
    pub fn next_to_last(&self) -> u64 {
        self.values[self.values.len() - 2]
    }
}

/// The two sub-intervals of each m's n-interval on which the counting
/// recursion takes different forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Span {
    A,
    B,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Span::A => write!(f, "A"),
            Span::B => write!(f, "B"),
        }
    }
}

/// Span classification of an n: its minimum part count m and which of the
/// two spans of `[(3^{m-1}+1)/2, (3^m-1)/2]` it falls in, with the exact
/// integer endpoints of that span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanClass {
    pub m: u32,
    pub span: Span,
    pub n_lo: u64,
    pub n_hi: u64,
}

/// An inclusive integer range. Empty when `lo > hi`; iterating an empty
/// range contributes zero terms to any sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeBounds {
    pub lo: u64,
    pub hi: u64,
}

impl RangeBounds {
    pub fn new(lo: u64, hi: u64) -> Self {
        Self { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub fn contains(&self, v: u64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

/// The minimum number of weights able to weigh every load `1..=n`: the
/// smallest m with `2n <= 3^m - 1`, found by repeated multiplication.
pub fn min_parts(n: u64) -> Result<u32, CrateError> {
    if n == 0 {
        return Err(CrateError::ZeroN);
    }
    let need = 2 * u128::from(n);
    let mut m = 1u32;
    let mut p = 3u128;
    while need > p - 1 {
        p *= 3;
        m += 1;
    }
    Ok(m)
}

/// Classifies `n >= 2` into span A or B for its m.
///
/// For each m >= 2 the interval `[(3^{m-1}+1)/2, (3^m-1)/2]` splits into
/// span A `[lo, lo + 3^{m-2}]` and span B `[lo + 3^{m-2} + 1, (3^m-1)/2]`.
/// `n = 1` is rejected: it has m = 1 and a single partition, and the span
/// endpoint formulas involve 3^{m-2}.
pub fn span_of(n: u64) -> Result<SpanClass, CrateError> {
    if n < 2 {
        return Err(CrateError::NoSpanForOne);
    }
    let m = min_parts(n)?;
    debug_assert!(m >= 2);
    let lo = (pow3(m - 1) + 1) / 2;
    let a_hi = lo + pow3(m - 2);
    let hi = (pow3(m) - 1) / 2;
    debug_assert!(lo <= n && n <= hi);
    Ok(if n <= a_hi {
        SpanClass {
            m,
            span: Span::A,
            n_lo: lo,
            n_hi: a_hi,
        }
    } else {
        SpanClass {
            m,
            span: Span::B,
            n_lo: a_hi + 1,
            n_hi: hi,
        }
    })
}

/// Inclusive range of the next-to-last prefix sum `R_{m-1}` over all
/// feasible partitions of n: lower end `ceil((n-1)/3)` in both spans,
/// upper end `floor((2n + 3^{m-2} - 1)/4)` in span A and `(3^{m-1}-1)/2`
/// in span B.
pub fn r_prev_range(n: u64) -> Result<RangeBounds, CrateError> {
    let sc = span_of(n)?;
    let lo = (n - 1).div_ceil(3);
    let hi = match sc.span {
        Span::A => (2 * n + pow3(sc.m - 2) - 1) / 4,
        Span::B => (pow3(sc.m - 1) - 1) / 2,
    };
    Ok(RangeBounds::new(lo, hi))
}

/// Bitset over the signed band `[-n, n]`: bit `v + n` is set when the
/// signed sum `v` is makable from the weights consumed so far. No
/// reachable positive load ever exceeds n, so the band never loses
/// information.
pub(crate) struct ReachSet {
    n: u64,
    words: Vec<u64>,
}

impl ReachSet {
    pub(crate) fn new(n: u64) -> Self {
        let bits = 2 * n as usize + 1;
        let mut words = vec![0u64; bits.div_ceil(64)];
        let zero_bit = n as usize; // value 0 sits at offset n
        words[zero_bit / 64] |= 1 << (zero_bit % 64);
        Self { n, words }
    }

    /// `S <- S | (S + w) | (S - w)`, clipped to the band.
    pub(crate) fn add_weight(&mut self, w: u64) {
        let bits = 2 * self.n as usize + 1;
        let src = self.words.clone();
        or_shifted_up(&mut self.words, &src, w as usize);
        or_shifted_down(&mut self.words, &src, w as usize);
        // clear bits beyond the band
        let last = bits.div_ceil(64) - 1;
        let used = bits - last * 64;
        if used < 64 {
            self.words[last] &= (1u64 << used) - 1;
        }
    }

    fn bit(&self, idx: usize) -> bool {
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    /// True when every load `1..=n` is reachable.
    pub(crate) fn covers_all_loads(&self) -> bool {
        (1..=self.n).all(|v| self.bit((v + self.n) as usize))
    }

    pub(crate) fn positive_loads(&self) -> BTreeSet<u64> {
        (1..=self.n)
            .filter(|&v| self.bit((v + self.n) as usize))
            .collect()
    }
}

fn or_shifted_up(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for i in (ws..dst.len()).rev() {
        let mut v = src[i - ws] << bs;
        if bs > 0 && i > ws {
            v |= src[i - ws - 1] >> (64 - bs);
        }
        dst[i] |= v;
    }
}

fn or_shifted_down(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for i in 0..dst.len().saturating_sub(ws) {
        let mut v = src[i + ws] >> bs;
        if bs > 0 && i + ws + 1 < src.len() {
            v |= src[i + ws + 1] << (64 - bs);
        }
        dst[i] |= v;
    }
}

pub(crate) fn reach_set(weights: &[u64], n: u64) -> ReachSet {
    let mut s = ReachSet::new(n);
    for &w in weights {
        s.add_weight(w);
    }
    s
}

/// True when the weights reach every load `1..=n` as a signed sum.
pub(crate) fn weights_cover_all(weights: &[u64], n: u64) -> bool {
    reach_set(weights, n).covers_all_loads()
}

/// Every positive load weighable in one weighing with the parts of `p`:
/// the set `{ sum(u_i * w_i) : u in {-1,0,1}^m }` intersected with the
/// positives, computed by iterative set expansion from `{0}`.
pub fn reachable_loads(p: &Partition) -> BTreeSet<u64> {
    reach_set(p.weights(), p.total()).positive_loads()
}

/// True iff `p` is a feasible partition of n: it must sum to n, have the
/// minimum part count for n (both checked, with distinct errors), and
/// reach every load `1..=n`. A correct-sum, wrong-length partition is
/// "not minimal", not "infeasible".
pub fn is_feasible(p: &Partition, n: u64) -> Result<bool, CrateError> {
    if n == 0 {
        return Err(CrateError::ZeroN);
    }
    let total = p.total();
    if total != n {
        return Err(CrateError::SumMismatch {
            expected: n,
            actual: total,
        });
    }
    let m = min_parts(n)?;
    if p.len() != m as usize {
        return Err(CrateError::WrongPartCount {
            expected: m,
            actual: p.len(),
        });
    }
    Ok(weights_cover_all(p.weights(), n))
}

/// First violated necessary bound, for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BoundsViolation {
    #[error("the lightest weight must be 1, got {w1}")]
    FirstWeightNotOne { w1: u64 },

    #[error("part {index} is {weight}, above the bound 2*R+1 = {bound}")]
    AbovePrefixBound {
        index: usize,
        weight: u64,
        bound: u64,
    },
}

/// Verbose variant of [`bounds_ok`]: reports the first violated
/// inequality instead of a bare boolean.
pub fn bounds_check(p: &Partition) -> Result<(), BoundsViolation> {
    let ws = p.weights();
    if ws[0] != 1 {
        return Err(BoundsViolation::FirstWeightNotOne { w1: ws[0] });
    }
    let mut r = 0u64;
    for (i, &w) in ws.iter().enumerate() {
        let bound = 2 * r + 1;
        if w > bound {
            return Err(BoundsViolation::AbovePrefixBound {
                index: i + 1,
                weight: w,
                bound,
            });
        }
        r += w;
    }
    Ok(())
}

/// Necessary condition for feasibility: `w_1 = 1` and every later weight
/// satisfies `w_i <= 2*R_{i-1} + 1`. Used as the DFS pruning predicate;
/// passing it does not by itself prove feasibility.
pub fn bounds_ok(p: &Partition) -> bool {
    bounds_check(p).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(ws: &[u64]) -> Partition {
        Partition::new(ws.to_vec()).unwrap()
    }

    #[test]
    fn min_parts_small_and_boundaries() {
        assert_eq!(min_parts(1).unwrap(), 1);
        assert_eq!(min_parts(4).unwrap(), 2);
        assert_eq!(min_parts(5).unwrap(), 3);
        assert_eq!(min_parts(13).unwrap(), 3);
        assert_eq!(min_parts(14).unwrap(), 4);
        assert_eq!(min_parts(16).unwrap(), 4);
        assert_eq!(min_parts(0), Err(CrateError::ZeroN));
        // every (3^m - 1)/2 is the last n with m parts
        for m in 1..=12 {
            let top = (pow3(m) - 1) / 2;
            assert_eq!(min_parts(top).unwrap(), m);
            assert_eq!(min_parts(top + 1).unwrap(), m + 1);
        }
    }

    #[test]
    fn span_of_examples() {
        assert_eq!(
            span_of(16).unwrap(),
            SpanClass {
                m: 4,
                span: Span::A,
                n_lo: 14,
                n_hi: 23
            }
        );
        assert_eq!(
            span_of(26).unwrap(),
            SpanClass {
                m: 4,
                span: Span::B,
                n_lo: 24,
                n_hi: 40
            }
        );
        assert_eq!(
            span_of(5).unwrap(),
            SpanClass {
                m: 3,
                span: Span::A,
                n_lo: 5,
                n_hi: 8
            }
        );
        assert_eq!(span_of(1), Err(CrateError::NoSpanForOne));
        assert_eq!(span_of(0), Err(CrateError::NoSpanForOne));
    }

    #[test]
    fn spans_tile_each_m_interval() {
        // spans A and B are disjoint and together cover
        // [(3^{m-1}+1)/2, (3^m-1)/2], for m in 2..=12
        for m in 2..=12u32 {
            let lo = (pow3(m - 1) + 1) / 2;
            let hi = (pow3(m) - 1) / 2;
            let a_hi = lo + pow3(m - 2);
            let mut prev: Option<SpanClass> = None;
            for n in lo..=hi {
                let sc = span_of(n).unwrap();
                assert_eq!(sc.m, m);
                let want = if n <= a_hi { Span::A } else { Span::B };
                assert_eq!(sc.span, want, "n = {n}");
                assert!(sc.n_lo <= n && n <= sc.n_hi);
                if let Some(p) = prev {
                    if p.span == sc.span {
                        assert_eq!((p.n_lo, p.n_hi), (sc.n_lo, sc.n_hi));
                    } else {
                        assert_eq!(p.n_hi + 1, sc.n_lo, "gap or overlap at n = {n}");
                    }
                }
                prev = Some(sc);
            }
            // endpoints of the two spans meet the interval exactly
            assert_eq!(span_of(lo).unwrap().n_lo, lo);
            assert_eq!(span_of(hi).unwrap().n_hi, hi);
        }
    }

    #[test]
    fn r_prev_range_examples() {
        assert_eq!(r_prev_range(16).unwrap(), RangeBounds::new(5, 10));
        assert_eq!(r_prev_range(26).unwrap(), RangeBounds::new(9, 13));
        assert_eq!(r_prev_range(5).unwrap(), RangeBounds::new(2, 3));
    }

    #[test]
    fn empty_range_contributes_nothing() {
        let r = RangeBounds::new(4, 3);
        assert!(r.is_empty());
        assert_eq!(r.len(), 0);
        assert_eq!(r.iter().count(), 0);
        assert_eq!(r.iter().sum::<u64>(), 0);
        assert!(!r.contains(3));
    }

    #[test]
    fn reachable_loads_examples() {
        assert_eq!(
            reachable_loads(&part(&[1])),
            BTreeSet::from([1])
        );
        assert_eq!(
            reachable_loads(&part(&[1, 3, 9])),
            (1..=13).collect::<BTreeSet<_>>()
        );
        assert_eq!(
            reachable_loads(&part(&[1, 1, 4])),
            (1..=6).collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn ternary_weights_reach_their_full_band() {
        for m in 1..=8u32 {
            let ws: Vec<u64> = (0..m).map(pow3).collect();
            let p = part(&ws);
            let top = (pow3(m) - 1) / 2;
            assert_eq!(p.total(), top);
            assert_eq!(
                reachable_loads(&p),
                (1..=top).collect::<BTreeSet<_>>(),
                "m = {m}"
            );
        }
    }

    #[test]
    fn is_feasible_examples() {
        assert_eq!(is_feasible(&part(&[1, 2, 6]), 9), Ok(true));
        assert_eq!(is_feasible(&part(&[1, 4, 4]), 9), Ok(false));
        assert_eq!(is_feasible(&part(&[1, 3, 9]), 13), Ok(true));
    }

    #[test]
    fn is_feasible_precondition_errors_are_distinct() {
        // wrong sum
        assert_eq!(
            is_feasible(&part(&[1, 2, 6]), 10),
            Err(CrateError::SumMismatch {
                expected: 10,
                actual: 9
            })
        );
        // right sum, wrong length: not minimal rather than infeasible
        assert_eq!(
            is_feasible(&part(&[1, 2, 2, 4]), 9),
            Err(CrateError::WrongPartCount {
                expected: 3,
                actual: 4
            })
        );
    }

    #[test]
    fn bounds_examples() {
        assert!(bounds_ok(&part(&[1, 3, 9])));
        assert!(!bounds_ok(&part(&[2, 3])));
        assert!(!bounds_ok(&part(&[1, 4, 4])));
        assert_eq!(
            bounds_check(&part(&[2, 3])),
            Err(BoundsViolation::FirstWeightNotOne { w1: 2 })
        );
        assert_eq!(
            bounds_check(&part(&[1, 4, 4])),
            Err(BoundsViolation::AbovePrefixBound {
                index: 2,
                weight: 4,
                bound: 3
            })
        );
    }

    #[test]
    fn partition_validation() {
        assert_eq!(Partition::new(vec![]), Err(CrateError::EmptyPartition));
        assert_eq!(
            Partition::new(vec![1, 0, 2]),
            Err(CrateError::ZeroWeight { index: 2 })
        );
        assert_eq!(
            Partition::new(vec![1, 3, 2]),
            Err(CrateError::NotNondecreasing {
                index: 3,
                weight: 2,
                prev: 3
            })
        );
        assert_eq!(part(&[1, 2, 2]).to_string(), "1 2 2");
    }

    #[test]
    fn prefix_sums_shape() {
        let p = part(&[1, 3, 9]);
        let r = p.prefix_sums();
        assert_eq!(r.values(), &[0, 1, 4, 13]);
        assert_eq!(r.total(), 13);
        assert_eq!(r.next_to_last(), 4);
    }

    #[test]
    fn reach_set_band_is_wide_enough() {
        // weights at the band edge: shifting by w = n must not lose bits
        let p = part(&[1, 1]);
        assert_eq!(reachable_loads(&p), BTreeSet::from([1, 2]));
        let q = part(&[2]);
        assert_eq!(reachable_loads(&q), BTreeSet::from([2]));
    }
}
