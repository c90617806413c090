//! OEIS-style b-file parsing and the bundled A005704 reference.
//!
//! A b-file is plain text: one "index value" pair per line, whitespace
//! separated, with '#' comment lines and blank lines ignored. Indices must
//! be contiguous. The A005704 terms (partitions of 3n into powers of 3)
//! ship with the crate so the triplicate check never touches the network.

use num_bigint::BigUint;
use thiserror::Error;

/// The bundled A005704 b-file, 1000 terms from index 0.
pub const A005704_BFILE: &str = include_str!("../data/b005704.txt");

/// Parsed b-file: values indexed contiguously from `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    offset: i64,
    values: Vec<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: expected \"index value\", got {got:?}")]
    Malformed { line: usize, got: String },

    #[error("line {line}: {got:?} is not a valid index")]
    BadIndex { line: usize, got: String },

    #[error("line {line}: {got:?} is not a nonnegative integer value")]
    BadValue { line: usize, got: String },

    #[error("line {line}: index {got} does not follow {prev}")]
    NonContiguous { line: usize, got: i64, prev: i64 },
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut offset = 0i64;
        let mut values: Vec<BigUint> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut it = trimmed.split_whitespace();
            let (idx_tok, val_tok) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(BFileError::Malformed {
                        line,
                        got: trimmed.to_string(),
                    })
                }
            };
            let idx: i64 = idx_tok.parse().map_err(|_| BFileError::BadIndex {
                line,
                got: idx_tok.to_string(),
            })?;
            let val: BigUint = val_tok.parse().map_err(|_| BFileError::BadValue {
                line,
                got: val_tok.to_string(),
            })?;
            if values.is_empty() {
                offset = idx;
            } else {
                let prev = offset + values.len() as i64 - 1;
                if idx != prev + 1 {
                    return Err(BFileError::NonContiguous {
                        line,
                        got: idx,
                        prev,
                    });
                }
            }
            values.push(val);
        }
        Ok(Self { offset, values })
    }

    /// Builds directly from parts, mainly for tests.
    pub fn from_parts(offset: i64, values: Vec<BigUint>) -> Self {
        Self { offset, values }
    }

    /// Index of the first term.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&BigUint> {
        let rel = index.checked_sub(self.offset)?;
        if rel < 0 {
            return None;
        }
        self.values.get(usize::try_from(rel).ok()?)
    }

    /// All values, first term first.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// The parsed bundled reference.
pub fn bundled_a005704() -> BFile {
    BFile::parse(A005704_BFILE).expect("bundled b-file is well-formed")
}
