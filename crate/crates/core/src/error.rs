use thiserror::Error;

/// Errors for precondition violations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be at least 1")]
    ZeroN,

    #[error("n = 1 has the single partition (1); span classification starts at n = 2")]
    NoSpanForOne,

    #[error("a partition needs at least one part")]
    EmptyPartition,

    #[error("weights must be positive; part {index} is zero")]
    ZeroWeight { index: usize },

    #[error("weights must be nondecreasing; part {index} is {weight}, after {prev}")]
    NotNondecreasing {
        index: usize,
        weight: u64,
        prev: u64,
    },

    #[error("partition sums to {actual}, expected {expected}")]
    SumMismatch { expected: u64, actual: u64 },

    #[error("partition has {actual} parts; the minimum for this n is {expected}, so it is not minimal")]
    WrongPartCount { expected: u32, actual: usize },

    #[error("parts must be at least 1")]
    ZeroParts,

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: u64, cap: u64 },

    #[error("n = {n} is in span B; the duplicate correction exists only in span A")]
    NotSpanA { n: u64 },

    #[error("the triplicate report requires m >= 3, got {m}")]
    TriplicateTooSmall { m: u32 },

    #[error("reference sequence has {actual} terms, need at least {required}")]
    ReferenceTooShort { required: u64, actual: u64 },

    #[error("invalid range: lo = {lo}, hi = {hi} (need 1 <= lo <= hi)")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("seed prefix disagrees with the base values t(0) = t(1) = 1")]
    BadSeedPrefix,
}
