//! Brute-force enumeration of all feasible partitions.
//!
//! This is the ground truth the counting recursion is verified against, and
//! the generator behind the `enumerate` command. The pruned enumerator
//! walks nondecreasing tuples depth first, cutting branches with the
//! necessary bounds; every surviving tuple is still re-checked by
//! signed-sum reachability, so the oracle's correctness does not depend on
//! whether those bounds happen to be sufficient. An unpruned enumerator is
//! kept alongside to prove the pruning loses nothing.

use crate::error::Error;
use crate::model::{self, min_parts, Partition};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Cap on the unpruned enumerator, which explores every nondecreasing
/// partition of n and exists only to validate the pruned one.
pub const DEFAULT_UNPRUNED_CAP: u64 = 60;

/// Prefix depth at which the parallel enumerator splits the search tree
/// across workers.
#[cfg(feature = "parallel")]
const SPLIT_DEPTH: u32 = 3;

/// All feasible partitions of one n, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub n: u64,
    /// Part count of every listed partition.
    pub m: u32,
    /// Strictly lexicographically increasing; every entry passes
    /// [`model::is_feasible`].
    pub partitions: Vec<Partition>,
    /// Always equals `partitions.len()`.
    pub count: u64,
}

impl EnumerationResult {
    fn new(n: u64, m: u32, partitions: Vec<Partition>) -> Self {
        let count = partitions.len() as u64;
        Self {
            n,
            m,
            partitions,
            count,
        }
    }
}

/// Largest total a prefix sum `r` can grow to in `k` more steps under the
/// growth cap `R <= 3*R' + 1`: `3^k * r + (3^k - 1)/2`, saturating.
fn max_reach(r: u64, k: u32) -> u64 {
    let p = 3u128.pow(k);
    let v = p * u128::from(r) + (p - 1) / 2;
    u64::try_from(v).unwrap_or(u64::MAX)
}

/// Depth-first walk over nondecreasing candidate tuples of length m
/// summing to n. At each depth the next weight is confined to
/// `[w_prev, min(2*R + 1, residue)]`; branches whose minimum completion
/// overshoots the residue or whose maximum growth cannot reach n are cut.
/// Complete tuples are passed to `emit` only after the signed-sum
/// reachability re-check.
fn dfs_feasible(n: u64, m: u32, prefix: &mut Vec<u64>, sum: u64, emit: &mut impl FnMut(&[u64])) {
    let depth = prefix.len() as u32;
    if depth == m {
        if sum == n && model::weights_cover_all(prefix, n) {
            emit(prefix);
        }
        return;
    }
    let residue = n - sum;
    let slots = u64::from(m - depth);
    let w_min = prefix.last().copied().unwrap_or(1);
    let w_max = (2 * sum + 1).min(residue);
    for w in w_min..=w_max {
        if w.saturating_mul(slots) > residue {
            break; // even the flat completion overshoots, and w only grows
        }
        if max_reach(sum + w, m - depth - 1) < n {
            continue; // cannot stretch to n from here
        }
        prefix.push(w);
        dfs_feasible(n, m, prefix, sum + w, emit);
        prefix.pop();
    }
}

fn enumerate_seq_impl(n: u64, m: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(m as usize);
    dfs_feasible(n, m, &mut prefix, 0, &mut |ws| {
        out.push(Partition::from_sorted_unchecked(ws.to_vec()));
    });
    out
}

/// Valid (prefix, sum) pairs at a fixed depth, in lexicographic order.
#[cfg(feature = "parallel")]
fn prefixes_at_depth(n: u64, m: u32, depth: u32) -> Vec<(Vec<u64>, u64)> {
    fn walk(
        n: u64,
        m: u32,
        depth: u32,
        prefix: &mut Vec<u64>,
        sum: u64,
        out: &mut Vec<(Vec<u64>, u64)>,
    ) {
        if prefix.len() as u32 == depth {
            out.push((prefix.clone(), sum));
            return;
        }
        let d = prefix.len() as u32;
        let residue = n - sum;
        let slots = u64::from(m - d);
        let w_min = prefix.last().copied().unwrap_or(1);
        let w_max = (2 * sum + 1).min(residue);
        for w in w_min..=w_max {
            if w.saturating_mul(slots) > residue {
                break;
            }
            if max_reach(sum + w, m - d - 1) < n {
                continue;
            }
            prefix.push(w);
            walk(n, m, depth, prefix, sum + w, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(depth as usize);
    walk(n, m, depth, &mut prefix, 0, &mut out);
    out
}

/// Sequential enumeration of every feasible partition of n, in
/// lexicographic order. Always available regardless of features; the
/// parallel front end must produce identical output.
pub fn enumerate_feasible_seq(n: u64) -> Result<EnumerationResult, Error> {
    let m = min_parts(n)?;
    Ok(EnumerationResult::new(n, m, enumerate_seq_impl(n, m)))
}

/// Every feasible partition of n, in lexicographic order. With the
/// `parallel` feature the top of the search tree is split across workers;
/// the result is identical to [`enumerate_feasible_seq`].
#[cfg(feature = "parallel")]
pub fn enumerate_feasible(n: u64) -> Result<EnumerationResult, Error> {
    let m = min_parts(n)?;
    if m <= SPLIT_DEPTH {
        return enumerate_feasible_seq(n);
    }
    let chunks: Vec<Vec<Partition>> = prefixes_at_depth(n, m, SPLIT_DEPTH)
        .into_par_iter()
        .map(|(mut prefix, sum)| {
            let mut local = Vec::new();
            dfs_feasible(n, m, &mut prefix, sum, &mut |ws| {
                local.push(Partition::from_sorted_unchecked(ws.to_vec()));
            });
            local
        })
        .collect();
    // rayon preserves task order, and prefixes came out lexicographic
    let partitions: Vec<Partition> = chunks.into_iter().flatten().collect();
    debug_assert!(partitions.windows(2).all(|p| p[0] < p[1]));
    Ok(EnumerationResult::new(n, m, partitions))
}

#[cfg(not(feature = "parallel"))]
pub fn enumerate_feasible(n: u64) -> Result<EnumerationResult, Error> {
    enumerate_feasible_seq(n)
}

/// Sequential count of feasible partitions without materializing them.
pub fn count_feasible_seq(n: u64) -> Result<u64, Error> {
    let m = min_parts(n)?;
    let mut count = 0u64;
    let mut prefix = Vec::with_capacity(m as usize);
    dfs_feasible(n, m, &mut prefix, 0, &mut |_| {
        count = count.checked_add(1).expect("enumeration count overflow");
    });
    Ok(count)
}

/// Number of feasible partitions of n, counted by the same walk as
/// [`enumerate_feasible`] but without storing the tuples.
#[cfg(feature = "parallel")]
pub fn count_feasible(n: u64) -> Result<u64, Error> {
    let m = min_parts(n)?;
    if m <= SPLIT_DEPTH {
        return count_feasible_seq(n);
    }
    let total = prefixes_at_depth(n, m, SPLIT_DEPTH)
        .into_par_iter()
        .map(|(mut prefix, sum)| {
            let mut count = 0u64;
            dfs_feasible(n, m, &mut prefix, sum, &mut |_| count += 1);
            count
        })
        .reduce(
            || 0u64,
            |a, b| a.checked_add(b).expect("enumeration count overflow"),
        );
    Ok(total)
}

#[cfg(not(feature = "parallel"))]
pub fn count_feasible(n: u64) -> Result<u64, Error> {
    count_feasible_seq(n)
}

/// Enumerates ALL nondecreasing partitions of n into exactly `parts`
/// parts, filtered by reachability only — no bound-based pruning. Used to
/// prove the pruned enumerator loses nothing and to verify minimality by
/// brute force, hence the small cap.
pub fn enumerate_unpruned(n: u64, parts: u32) -> Result<EnumerationResult, Error> {
    enumerate_unpruned_with_cap(n, parts, DEFAULT_UNPRUNED_CAP)
}

/// [`enumerate_unpruned`] with an explicit cap.
pub fn enumerate_unpruned_with_cap(n: u64, parts: u32, cap: u64) -> Result<EnumerationResult, Error> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    if parts == 0 {
        return Err(Error::ZeroParts);
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    fn walk(n: u64, parts: u32, prefix: &mut Vec<u64>, sum: u64, out: &mut Vec<Partition>) {
        let depth = prefix.len() as u32;
        if depth == parts {
            if sum == n && model::weights_cover_all(prefix, n) {
                out.push(Partition::from_sorted_unchecked(prefix.clone()));
            }
            return;
        }
        let residue = n - sum;
        let slots = u64::from(parts - depth);
        let w_min = prefix.last().copied().unwrap_or(1);
        for w in w_min..=residue {
            if w.saturating_mul(slots) > residue {
                break;
            }
            prefix.push(w);
            walk(n, parts, prefix, sum + w, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(parts as usize);
    walk(n, parts, &mut prefix, 0, &mut out);
    Ok(EnumerationResult::new(n, parts, out))
}

/// Smallest k for which some k-part partition of n reaches every load,
/// found by unrestricted search. Independent check of [`min_parts`].
pub fn min_parts_bruteforce(n: u64) -> Result<u32, Error> {
    min_parts_bruteforce_with_cap(n, DEFAULT_UNPRUNED_CAP)
}

/// [`min_parts_bruteforce`] with an explicit cap.
pub fn min_parts_bruteforce_with_cap(n: u64, cap: u64) -> Result<u32, Error> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    for k in 1.. {
        // terminates: n parts of 1 kg reach every load 1..=n
        if !enumerate_unpruned_with_cap(n, k, cap)?.partitions.is_empty() {
            return Ok(k);
        }
    }
    unreachable!()
}

/// One row of the bounds-versus-feasibility comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsGapRow {
    pub n: u64,
    /// Minimum-length tuples of n passing the necessary bounds.
    pub bounds_pass: u64,
    /// Of those, how many are actually feasible.
    pub feasible: u64,
}

/// Compares, per n, how many minimum-length nondecreasing tuples pass the
/// necessary bounds against how many are feasible. Observational only:
/// nothing in this crate assumes the bounds are sufficient, and the
/// enumerators re-check reachability either way.
pub fn bounds_gap_report(n_lo: u64, n_hi: u64) -> Result<Vec<BoundsGapRow>, Error> {
    if n_lo == 0 || n_lo > n_hi {
        return Err(Error::InvalidRange { lo: n_lo, hi: n_hi });
    }
    let mut rows = Vec::with_capacity((n_hi - n_lo + 1) as usize);
    for n in n_lo..=n_hi {
        let m = min_parts(n)?;
        let mut bounds_pass = 0u64;
        let mut feasible = 0u64;
        let mut prefix = Vec::with_capacity(m as usize);
        dfs_candidates(n, m, &mut prefix, 0, &mut |ws| {
            bounds_pass += 1;
            if model::weights_cover_all(ws, n) {
                feasible += 1;
            }
        });
        rows.push(BoundsGapRow {
            n,
            bounds_pass,
            feasible,
        });
    }
    Ok(rows)
}

/// Same walk as [`dfs_feasible`] but emitting every bound-passing tuple,
/// leaving the reachability verdict to the caller.
fn dfs_candidates(n: u64, m: u32, prefix: &mut Vec<u64>, sum: u64, emit: &mut impl FnMut(&[u64])) {
    let depth = prefix.len() as u32;
    if depth == m {
        if sum == n {
            emit(prefix);
        }
        return;
    }
    let residue = n - sum;
    let slots = u64::from(m - depth);
    let w_min = prefix.last().copied().unwrap_or(1);
    let w_max = (2 * sum + 1).min(residue);
    for w in w_min..=w_max {
        if w.saturating_mul(slots) > residue {
            break;
        }
        prefix.push(w);
        dfs_candidates(n, m, prefix, sum + w, emit);
        prefix.pop();
    }
}
