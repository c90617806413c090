//! Memoized evaluation of the two-span recursion for t(n), the number of
//! feasible partitions of n.
//!
//! Every m-part feasible partition of n is an (m-1)-part feasible
//! partition of some prefix sum `R_{m-1}` plus one final weight, so t(n)
//! is a sum of t over the admissible `R_{m-1}` range. In span A some of
//! those extensions would re-count a partition whose next-to-last part
//! exceeds the last one; a double sum subtracts exactly those duplicates.
//! In span B no duplication can arise and the plain sum stands.
//!
//! Counts are exact big integers, the fill is iterative bottom-up, and an
//! oracle sweep (see `verify`) checks the whole construction against
//! direct enumeration.

use num_bigint::BigUint;
use num_traits::{CheckedSub, One, Zero};

use crate::bfile::BFile;
use crate::error::Error;
use crate::model::{min_parts, pow3, r_prev_range, span_of, RangeBounds, Span};

/// Exact count of feasible partitions; it grows without a known bound, so
/// it is kept arbitrary precision end to end.
pub type Count = BigUint;

/// Memo of t values, contiguous from t(0). Entries are never rewritten
/// once stored; filling is strictly bottom-up, so each new value reads
/// only entries below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemoTable {
    values: Vec<Count>,
}

impl Default for MemoTable {
    fn default() -> Self {
        Self::new()
    }
}

impl MemoTable {
    /// Fresh table holding the base values t(0) = t(1) = 1.
    pub fn new() -> Self {
        Self {
            values: vec![Count::one(), Count::one()],
        }
    }

    /// Rebuilds a table from a contiguous prefix of previously computed
    /// values starting at t(0), e.g. a cache. The prefix must agree with
    /// the base values; anything shorter than the two base entries is
    /// padded with them.
    pub fn from_prefix(values: Vec<Count>) -> Result<Self, Error> {
        let mut table = Self::new();
        for (i, v) in values.into_iter().enumerate() {
            if i < 2 {
                if v != Count::one() {
                    return Err(Error::BadSeedPrefix);
                }
            } else {
                table.values.push(v);
            }
        }
        Ok(table)
    }

    /// Highest n with a stored value.
    pub fn filled_to(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// Number of stored entries.
    pub fn len(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        false // the base values are always present
    }

    pub fn get(&self, n: u64) -> Option<&Count> {
        self.values.get(usize::try_from(n).ok()?)
    }

    /// All stored values, t(0) first.
    pub fn values(&self) -> &[Count] {
        &self.values
    }

    /// Fills the table bottom-up through n. Idempotent: already-stored
    /// values are left untouched.
    pub fn ensure(&mut self, n: u64) {
        while self.filled_to() < n {
            let k = self.filled_to() + 1;
            let v = self.compute_next(k);
            self.values.push(v);
        }
    }

    /// t(k) for the next unfilled k (k >= 2, all smaller values present).
    fn compute_next(&self, k: u64) -> Count {
        let sc = span_of(k).expect("k >= 2 here");
        let range = r_prev_range(k).expect("k >= 2 here");
        let main = self.range_sum(&range, k);
        match sc.span {
            Span::B => main,
            Span::A => {
                let corr = self.correction_sum(k, range.hi);
                main.checked_sub(&corr).unwrap_or_else(|| {
                    panic!(
                        "internal error: correction {corr} exceeds main sum {main} at n = {k}; \
                         the recursion bounds are mis-transcribed"
                    )
                })
            }
        }
    }

    fn range_sum(&self, range: &RangeBounds, below: u64) -> Count {
        let mut acc = Count::zero();
        for r in range.iter() {
            // the recursion must only ever consult strictly smaller n
            assert!(r < below, "recursion reached t({r}) while computing t({below})");
            acc += &self.values[r as usize];
        }
        acc
    }

    /// The span-A duplicate correction: for each problematic `R_{m-1}`
    /// in `[ceil((3n+2)/5), outer_hi]`, sum t over the incompatible
    /// `R_{m-2}` range `[ceil((R-1)/3), 2R - n - 1]`.
    fn correction_sum(&self, n: u64, outer_hi: u64) -> Count {
        let mut acc = Count::zero();
        let outer = correction_outer(n, outer_hi);
        for r in outer.iter() {
            let inner = correction_inner(n, r);
            acc += self.range_sum(&inner, n);
        }
        acc
    }
}

fn correction_outer(n: u64, outer_hi: u64) -> RangeBounds {
    RangeBounds::new((3 * n + 2).div_ceil(5), outer_hi)
}

fn correction_inner(n: u64, r: u64) -> RangeBounds {
    debug_assert!(2 * r > n, "inner range only exists for 2R >= n + 1");
    RangeBounds::new((r - 1).div_ceil(3), 2 * r - n - 1)
}

/// t(n): the number of feasible partitions of n, with t(0) = t(1) = 1.
pub fn t(n: u64) -> Count {
    let mut memo = MemoTable::new();
    memo.ensure(n);
    memo.get(n).expect("just ensured").clone()
}

/// The fully expanded span-A duplicate-correction double sum, for
/// diagnostics and tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionTerm {
    pub n: u64,
    /// Range of problematic `R_{m-1}` values; kept with its literal
    /// endpoints even when empty.
    pub outer: RangeBounds,
    /// Per `R_{m-1}` in the outer range, the incompatible `R_{m-2}` range.
    pub inner: Vec<(u64, RangeBounds)>,
    /// Exactly the subtracted term of the span-A formula.
    pub total: Count,
}

/// Expands the duplicate correction for a span-A n. Span-B n are
/// rejected: no duplication arises there.
pub fn correction_term(n: u64) -> Result<CorrectionTerm, Error> {
    let mut memo = MemoTable::new();
    correction_term_with(&mut memo, n)
}

/// [`correction_term`] against a caller-supplied memo.
pub fn correction_term_with(memo: &mut MemoTable, n: u64) -> Result<CorrectionTerm, Error> {
    let sc = span_of(n)?;
    if sc.span != Span::A {
        return Err(Error::NotSpanA { n });
    }
    let outer_hi = r_prev_range(n)?.hi;
    let outer = correction_outer(n, outer_hi);
    if !outer.is_empty() {
        memo.ensure(outer.hi); // inner ranges stop at 2*outer.hi - n - 1 < outer.hi + 1
    }
    let mut inner = Vec::new();
    let mut total = Count::zero();
    for r in outer.iter() {
        let rng = correction_inner(n, r);
        for q in rng.iter() {
            total += memo.get(q).expect("ensured above");
        }
        inner.push((r, rng));
    }
    Ok(CorrectionTerm {
        n,
        outer,
        inner,
        total,
    })
}

/// One row of a t table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: u64,
    pub m: u32,
    /// `None` for n = 1, which sits outside the two-span classification.
    pub span: Option<Span>,
    pub t: Count,
}

/// t(n) for all 1 <= n <= n_max in one bottom-up pass, with each n's part
/// count and span label.
pub fn table(n_max: u64) -> Result<Vec<TableRow>, Error> {
    let mut memo = MemoTable::new();
    table_with(&mut memo, n_max)
}

/// [`table`] against a caller-supplied memo (e.g. seeded from a cache).
pub fn table_with(memo: &mut MemoTable, n_max: u64) -> Result<Vec<TableRow>, Error> {
    if n_max == 0 {
        return Err(Error::ZeroN);
    }
    memo.ensure(n_max);
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        rows.push(TableRow {
            n,
            m: min_parts(n)?,
            span: span_of(n).ok().map(|sc| sc.span),
            t: memo.get(n).expect("ensured above").clone(),
        });
    }
    Ok(rows)
}

/// Aligned group of (up to) three consecutive n, walking span B downward
/// from its top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriplicateGroup {
    /// 0-based group index from the top of the span.
    pub index: u64,
    /// The n values of the group, descending.
    pub ns: Vec<u64>,
    /// t(n) for each entry of `ns`.
    pub values: Vec<Count>,
    /// Whether all t values in the group are equal.
    pub equal: bool,
    /// Whether the group holds all three n (the span tail may be shorter).
    pub complete: bool,
    /// Reference index paired with this group under the discovered
    /// alignment, when one exists.
    pub reference_index: Option<i64>,
    pub reference_value: Option<Count>,
    /// `equal` and the reference term matches the group value.
    pub consistent: bool,
}

/// Span-B t values read backwards, grouped in threes and paired with a
/// reference sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriplicateReport {
    pub m: u32,
    pub span_lo: u64,
    pub span_hi: u64,
    /// Reference index paired with group 0; discovered by matching, never
    /// assumed.
    pub alignment: Option<i64>,
    pub groups: Vec<TriplicateGroup>,
}

/// Walks n from `(3^m - 1)/2` down through span B, groups consecutive n
/// in threes, reports whether each group's t values are equal, and pairs
/// the groups with consecutive terms of the supplied reference sequence
/// under a single discovered alignment. Trailing groups shorter than
/// three are flagged as incomplete rather than asserted away.
pub fn triplicate_report(m: u32, reference: &BFile) -> Result<TriplicateReport, Error> {
    if m < 3 {
        return Err(Error::TriplicateTooSmall { m });
    }
    let span_hi = (pow3(m) - 1) / 2;
    let span_lo = (pow3(m - 1) + 1) / 2 + pow3(m - 2) + 1;
    let span_len = span_hi - span_lo + 1;
    let complete_groups = span_len / 3;
    if (reference.len() as u64) < complete_groups {
        return Err(Error::ReferenceTooShort {
            required: complete_groups,
            actual: reference.len() as u64,
        });
    }

    let mut memo = MemoTable::new();
    memo.ensure(span_hi);

    let mut groups: Vec<TriplicateGroup> = Vec::new();
    let mut top = span_hi;
    let mut index = 0u64;
    loop {
        let bottom = top.saturating_sub(2).max(span_lo);
        let ns: Vec<u64> = (bottom..=top).rev().collect();
        let values: Vec<Count> = ns
            .iter()
            .map(|&k| memo.get(k).expect("ensured above").clone())
            .collect();
        let equal = values.windows(2).all(|w| w[0] == w[1]);
        groups.push(TriplicateGroup {
            index,
            ns,
            values,
            equal,
            complete: bottom + 2 == top,
            reference_index: None,
            reference_value: None,
            consistent: false,
        });
        if bottom == span_lo {
            break;
        }
        top = bottom - 1;
        index += 1;
    }

    // Discover the alignment: the complete groups' values must appear as
    // a contiguous run in the reference.
    let complete_values: Vec<&Count> = groups
        .iter()
        .filter(|g| g.complete && g.equal)
        .map(|g| &g.values[0])
        .collect();
    let alignment = if complete_values.len() as u64 == complete_groups {
        find_run(reference, &complete_values)
    } else {
        None // some complete group is not even internally equal
    };

    if let Some(a) = alignment {
        for g in &mut groups {
            let ri = a + g.index as i64;
            g.reference_index = Some(ri);
            g.reference_value = reference.get(ri).cloned();
            g.consistent = g.equal && g.reference_value.as_ref() == Some(&g.values[0]);
        }
    }

    Ok(TriplicateReport {
        m,
        span_lo,
        span_hi,
        alignment,
        groups,
    })
}

/// First reference index where `needle` appears as a contiguous run.
fn find_run(reference: &BFile, needle: &[&Count]) -> Option<i64> {
    if needle.is_empty() {
        return None;
    }
    let values = reference.values();
    let n = needle.len();
    (0..=values.len().checked_sub(n)?)
        .find(|&s| (0..n).all(|i| &values[s + i] == needle[i]))
        .map(|s| reference.offset() + s as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bfile;

    fn tn(n: u64) -> u64 {
        // convenience for small frozen values
        u64::try_from(t(n)).unwrap_or(u64::MAX)
    }

    #[test]
    fn base_cases_and_worked_values() {
        assert_eq!(tn(0), 1);
        assert_eq!(tn(1), 1);
        assert_eq!(tn(5), 2);
        assert_eq!(tn(13), 1);
        assert_eq!(tn(16), 12);
    }

    #[test]
    fn table_matches_frozen_small_rows() {
        let rows = table(13).unwrap();
        let flat: Vec<(u64, u32, Option<Span>, u64)> = rows
            .iter()
            .map(|r| {
                (
                    r.n,
                    r.m,
                    r.span,
                    u64::try_from(r.t.clone()).unwrap(),
                )
            })
            .collect();
        assert_eq!(
            flat,
            vec![
                (1, 1, None, 1),
                (2, 2, Some(Span::A), 1),
                (3, 2, Some(Span::A), 1),
                (4, 2, Some(Span::B), 1),
                (5, 3, Some(Span::A), 2),
                (6, 3, Some(Span::A), 2),
                (7, 3, Some(Span::A), 3),
                (8, 3, Some(Span::A), 2),
                (9, 3, Some(Span::B), 2),
                (10, 3, Some(Span::B), 2),
                (11, 3, Some(Span::B), 1),
                (12, 3, Some(Span::B), 1),
                (13, 3, Some(Span::B), 1),
            ]
        );
        assert_eq!(table(0), Err(Error::ZeroN));
    }

    #[test]
    fn correction_term_examples() {
        let c5 = correction_term(5).unwrap();
        assert_eq!(c5.outer, RangeBounds::new(4, 3));
        assert!(c5.outer.is_empty());
        assert!(c5.inner.is_empty());
        assert_eq!(c5.total, Count::zero());

        let c16 = correction_term(16).unwrap();
        assert_eq!(c16.outer, RangeBounds::new(10, 10));
        assert_eq!(c16.inner, vec![(10, RangeBounds::new(3, 3))]);
        assert_eq!(c16.total, t(3));

        assert_eq!(correction_term(26), Err(Error::NotSpanA { n: 26 }));
    }

    #[test]
    fn memo_idempotence() {
        let mut big = MemoTable::new();
        big.ensure(300);
        for k in [0u64, 1, 7, 40, 123, 299, 300] {
            assert_eq!(big.get(k).unwrap(), &t(k), "k = {k}");
        }
        // re-ensuring smaller n changes nothing
        let snapshot = big.clone();
        big.ensure(100);
        assert_eq!(big, snapshot);
    }

    #[test]
    fn from_prefix_seeds_and_rejects() {
        let mut m = MemoTable::new();
        m.ensure(50);
        let rebuilt = MemoTable::from_prefix(m.values().to_vec()).unwrap();
        assert_eq!(rebuilt, m);
        assert!(MemoTable::from_prefix(vec![Count::from(2u32)]).is_err());
    }

    #[test]
    fn positivity_and_monotone_depth() {
        let mut memo = MemoTable::new();
        memo.ensure(1500);
        for k in 0..=1500u64 {
            assert!(memo.get(k).unwrap() > &Count::zero(), "t({k}) = 0");
        }
    }

    #[test]
    fn triplicate_m3_shape() {
        let reference = bfile::bundled_a005704();
        let rep = triplicate_report(3, &reference).unwrap();
        assert_eq!((rep.span_lo, rep.span_hi), (9, 13));
        assert_eq!(rep.alignment, Some(0));
        assert_eq!(rep.groups.len(), 2);
        assert_eq!(rep.groups[0].ns, vec![13, 12, 11]);
        assert!(rep.groups[0].complete && rep.groups[0].equal && rep.groups[0].consistent);
        assert_eq!(rep.groups[0].values[0], Count::one());
        assert_eq!(rep.groups[1].ns, vec![10, 9]);
        assert!(!rep.groups[1].complete);
        assert!(rep.groups[1].equal);
        assert_eq!(rep.groups[1].values[0], Count::from(2u32));
    }

    #[test]
    fn triplicate_m4_values() {
        let reference = bfile::bundled_a005704();
        let rep = triplicate_report(4, &reference).unwrap();
        assert_eq!((rep.span_lo, rep.span_hi), (24, 40));
        assert_eq!(rep.groups.len(), 6);
        let vals: Vec<u64> = rep
            .groups
            .iter()
            .map(|g| u64::try_from(g.values[0].clone()).unwrap())
            .collect();
        assert_eq!(vals, vec![1, 2, 3, 5, 7, 9]);
        assert!(rep.groups.iter().take(5).all(|g| g.complete && g.consistent));
        assert!(!rep.groups[5].complete);
    }

    #[test]
    fn triplicate_preconditions() {
        let reference = bfile::bundled_a005704();
        assert_eq!(
            triplicate_report(2, &reference),
            Err(Error::TriplicateTooSmall { m: 2 })
        );
        let empty = BFile::from_parts(0, vec![]);
        assert_eq!(
            triplicate_report(3, &empty),
            Err(Error::ReferenceTooShort {
                required: 1,
                actual: 0
            })
        );
    }
}
