//! Persistent t-value cache so large tables resume across runs.
//!
//! Versioned text format, canonical by construction:
//!
//! ```text
//! bachet-cache 1 0.1.0
//! 0 1
//! 1 1
//! 2 1
//! ...
//! ```
//!
//! Header fields are the magic, the format version, and the generator
//! version. Entries are a contiguous `n t` run from 0 with t in decimal.
//! Loading then saving reproduces the bytes exactly. A corrupted or
//! version-mismatched cache is ignored with a warning — never trusted.

use std::fs;
use std::io;
use std::path::Path;

use num_bigint::BigUint;

pub const CACHE_MAGIC: &str = "bachet-cache";
pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Generator version recorded in the header.
pub fn generator_version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}

/// Why a cache file was set aside.
#[derive(Debug, PartialEq, Eq)]
pub enum CacheReject {
    Unreadable(String),
    BadHeader(String),
    FormatVersion { found: String },
    GeneratorVersion { found: String },
    BadEntry { line: usize, got: String },
    NonContiguous { line: usize },
}

impl std::fmt::Display for CacheReject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CacheReject::Unreadable(e) => write!(f, "unreadable: {e}"),
            CacheReject::BadHeader(h) => write!(f, "unrecognized header {h:?}"),
            CacheReject::FormatVersion { found } => {
                write!(f, "format version {found:?} (need {CACHE_FORMAT_VERSION})")
            }
            CacheReject::GeneratorVersion { found } => {
                write!(f, "written by generator {found:?} (this is {})", generator_version())
            }
            CacheReject::BadEntry { line, got } => write!(f, "line {line}: bad entry {got:?}"),
            CacheReject::NonContiguous { line } => {
                write!(f, "line {line}: entries must run contiguously from 0")
            }
        }
    }
}

/// Parses cache bytes into the t(0).. value run.
pub fn parse(text: &str) -> Result<Vec<BigUint>, CacheReject> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    let fields: Vec<&str> = header.split_whitespace().collect();
    match fields.as_slice() {
        [magic, version, generator] => {
            if *magic != CACHE_MAGIC {
                return Err(CacheReject::BadHeader(header.to_string()));
            }
            if *version != CACHE_FORMAT_VERSION.to_string() {
                return Err(CacheReject::FormatVersion {
                    found: (*version).to_string(),
                });
            }
            if *generator != generator_version() {
                return Err(CacheReject::GeneratorVersion {
                    found: (*generator).to_string(),
                });
            }
        }
        _ => return Err(CacheReject::BadHeader(header.to_string())),
    }
    let mut values = Vec::new();
    for (i, raw) in lines.enumerate() {
        let line = i + 2;
        let mut it = raw.split_whitespace();
        let (n_tok, t_tok) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(CacheReject::BadEntry {
                    line,
                    got: raw.to_string(),
                })
            }
        };
        let n: u64 = n_tok.parse().map_err(|_| CacheReject::BadEntry {
            line,
            got: raw.to_string(),
        })?;
        if n != values.len() as u64 {
            return Err(CacheReject::NonContiguous { line });
        }
        let t: BigUint = t_tok.parse().map_err(|_| CacheReject::BadEntry {
            line,
            got: raw.to_string(),
        })?;
        values.push(t);
    }
    Ok(values)
}

/// Loads a cache file; `Ok(None)` when the file does not exist yet.
pub fn load(path: &Path) -> Result<Option<Vec<BigUint>>, CacheReject> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(CacheReject::Unreadable(e.to_string())),
    };
    parse(&text).map(Some)
}

/// Canonical bytes for a value run.
pub fn render(values: &[BigUint]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{CACHE_MAGIC} {CACHE_FORMAT_VERSION} {}\n",
        generator_version()
    ));
    for (n, t) in values.iter().enumerate() {
        out.push_str(&format!("{n} {t}\n"));
    }
    out
}

pub fn save(path: &Path, values: &[BigUint]) -> io::Result<()> {
    fs::write(path, render(values))
}
