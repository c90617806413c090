//! Recursion-versus-enumeration sweeps.
//!
//! The recursion and the oracle share nothing but the domain definition,
//! so agreement over a range is the crate's end-to-end check.

use num_bigint::BigUint;

use crate::counting::MemoTable;
use crate::error::Error;
use crate::oracle;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// One n of a sweep: the recursion's count against the oracle's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub n: u64,
    pub recursion: BigUint,
    pub oracle: u64,
    pub matched: bool,
}

/// Compares t(n) against brute-force enumeration for every n in
/// `[n_lo, n_hi]`. The oracle counts fan out across worker threads when
/// built with the `parallel` feature; rows come back in ascending n
/// either way.
pub fn verify_range(n_lo: u64, n_hi: u64) -> Result<Vec<VerifyRow>, Error> {
    if n_lo == 0 || n_lo > n_hi {
        return Err(Error::InvalidRange { lo: n_lo, hi: n_hi });
    }
    let mut memo = MemoTable::new();
    memo.ensure(n_hi);
    let ns: Vec<u64> = (n_lo..=n_hi).collect();
    let counts = oracle_counts(&ns)?;
    Ok(ns
        .into_iter()
        .zip(counts)
        .map(|(n, oracle)| {
            let recursion = memo.get(n).expect("ensured above").clone();
            let matched = recursion == BigUint::from(oracle);
            VerifyRow {
                n,
                recursion,
                oracle,
                matched,
            }
        })
        .collect())
}

#[cfg(feature = "parallel")]
fn oracle_counts(ns: &[u64]) -> Result<Vec<u64>, Error> {
    ns.par_iter().map(|&n| oracle::count_feasible(n)).collect()
}

#[cfg(not(feature = "parallel"))]
fn oracle_counts(ns: &[u64]) -> Result<Vec<u64>, Error> {
    ns.iter().map(|&n| oracle::count_feasible(n)).collect()
}

/// First row whose counts disagree, if any.
pub fn first_mismatch(rows: &[VerifyRow]) -> Option<&VerifyRow> {
    rows.iter().find(|r| !r.matched)
}
