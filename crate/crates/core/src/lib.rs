//! Minimum-size weight sets for a two-pan balance.
//!
//! Split an n-kilogram stone into the fewest parts that can weigh every
//! integral load from 1 to n in one weighing, with weights allowed on both
//! pans. A partition `w_1 <= ... <= w_m` of n is *feasible* when every k
//! in `1..=n` equals `sum(u_i * w_i)` for some signs `u_i` in `{-1,0,+1}`.
//! The classic 1, 3, 9, ..., 3^{m-1} set is the extreme case; this crate
//! handles every n.
//!
//! * [`model`] — domain types, the signed-sum reachability check, and the
//!   exact-integer feasibility bounds.
//! * [`oracle`] — brute-force enumeration, the ground truth.
//! * [`counting`] — the memoized two-span recursion for t(n), the number
//!   of feasible partitions, in exact big integers.
//! * [`bfile`] — OEIS b-file parsing plus the bundled A005704 reference
//!   the span-B triplicate structure is checked against.
//! * [`verify`] — recursion-versus-oracle sweeps.
//!
//! Built with the `parallel` feature (default), enumeration and sweeps
//! fan out across threads via rayon; results are bit-identical to the
//! sequential fallback.

pub mod bfile;
pub mod counting;
pub mod error;
pub mod model;
pub mod oracle;
pub mod verify;

pub use bfile::{bundled_a005704, BFile, BFileError};
pub use counting::{
    correction_term, t, table, triplicate_report, CorrectionTerm, Count, MemoTable, TableRow,
    TriplicateGroup, TriplicateReport,
};
pub use error::Error;
pub use model::{
    bounds_check, bounds_ok, is_feasible, min_parts, pow3, r_prev_range, reachable_loads, span_of,
    BoundsViolation, Partition, PrefixSums, RangeBounds, Span, SpanClass,
};
pub use oracle::{
    count_feasible, enumerate_feasible, enumerate_feasible_seq, enumerate_unpruned,
    min_parts_bruteforce, EnumerationResult, DEFAULT_UNPRUNED_CAP,
};
pub use verify::{first_mismatch, verify_range, VerifyRow};
