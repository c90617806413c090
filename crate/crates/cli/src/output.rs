//! Row emission in the three output formats.
//!
//! CSV rows are comma-joined with no quoting; every field is an integer,
//! a letter tag, or a dash. JSON is one array of flat objects. Counts are
//! always decimal text, never native JSON numbers, so downstream parsers
//! cannot truncate them at 53 bits. A plain, a CSV, and a JSON emission of
//! the same run carry identical data.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// Row for `count` and `table`: n, part count, span, t.
pub struct CountRow {
    pub n: u64,
    pub m: Option<u32>,
    pub span: Option<String>,
    pub t: String,
}

/// Row for `enumerate`: one partition, or the `...` truncation marker.
pub struct EnumRow {
    pub n: u64,
    pub partition: String,
}

/// Row for `verify`: recursion count against oracle count.
pub struct VerifyRowOut {
    pub n: u64,
    pub recursion: String,
    pub oracle: String,
    pub matched: bool,
}

/// Row for `oeis`: t(n) with its triplicate group and reference pairing.
pub struct OeisRow {
    pub n: u64,
    pub t: String,
    pub group: u64,
    pub reference_index: Option<i64>,
    pub consistent: bool,
}

fn dash<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn write_lines(out: &mut impl Write, lines: Vec<String>) -> std::io::Result<()> {
    for l in lines {
        writeln!(out, "{l}")?;
    }
    Ok(())
}

fn write_json(out: &mut impl Write, rows: Vec<Value>) -> std::io::Result<()> {
    writeln!(out, "{}", Value::Array(rows))
}

pub fn emit_count(out: &mut impl Write, rows: &[CountRow], format: Format) -> std::io::Result<()> {
    match format {
        Format::Plain => write_lines(
            out,
            rows.iter()
                .map(|r| format!("{} {} {} {}", r.n, dash(&r.m), dash(&r.span), r.t))
                .collect(),
        ),
        Format::Csv => {
            writeln!(out, "n,m,span,t")?;
            write_lines(
                out,
                rows.iter()
                    .map(|r| format!("{},{},{},{}", r.n, dash(&r.m), dash(&r.span), r.t))
                    .collect(),
            )
        }
        Format::Json => write_json(
            out,
            rows.iter()
                .map(|r| json!({"n": r.n, "m": r.m, "span": r.span, "t": r.t}))
                .collect(),
        ),
    }
}

pub fn emit_enumerate(out: &mut impl Write, rows: &[EnumRow], format: Format) -> std::io::Result<()> {
    match format {
        Format::Plain => write_lines(out, rows.iter().map(|r| r.partition.clone()).collect()),
        Format::Csv => {
            writeln!(out, "n,partition")?;
            write_lines(
                out,
                rows.iter()
                    .map(|r| format!("{},{}", r.n, r.partition))
                    .collect(),
            )
        }
        Format::Json => write_json(
            out,
            rows.iter()
                .map(|r| json!({"n": r.n, "partition": r.partition}))
                .collect(),
        ),
    }
}

pub fn emit_verify(
    out: &mut impl Write,
    rows: &[VerifyRowOut],
    format: Format,
) -> std::io::Result<()> {
    let flag = |m: bool| if m { "ok" } else { "mismatch" };
    match format {
        Format::Plain => write_lines(
            out,
            rows.iter()
                .map(|r| format!("{} {} {} {}", r.n, r.recursion, r.oracle, flag(r.matched)))
                .collect(),
        ),
        Format::Csv => {
            writeln!(out, "n,recursion,oracle,match")?;
            write_lines(
                out,
                rows.iter()
                    .map(|r| format!("{},{},{},{}", r.n, r.recursion, r.oracle, flag(r.matched)))
                    .collect(),
            )
        }
        Format::Json => write_json(
            out,
            rows.iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "recursion": r.recursion,
                        "oracle": r.oracle,
                        "match": flag(r.matched),
                    })
                })
                .collect(),
        ),
    }
}

pub fn emit_oeis(out: &mut impl Write, rows: &[OeisRow], format: Format) -> std::io::Result<()> {
    let flag = |c: bool| if c { "yes" } else { "no" };
    match format {
        Format::Plain => write_lines(
            out,
            rows.iter()
                .map(|r| {
                    format!(
                        "{} {} {} {} {}",
                        r.n,
                        r.t,
                        r.group,
                        dash(&r.reference_index),
                        flag(r.consistent)
                    )
                })
                .collect(),
        ),
        Format::Csv => {
            writeln!(out, "n,t,group,ref,consistent")?;
            write_lines(
                out,
                rows.iter()
                    .map(|r| {
                        format!(
                            "{},{},{},{},{}",
                            r.n,
                            r.t,
                            r.group,
                            dash(&r.reference_index),
                            flag(r.consistent)
                        )
                    })
                    .collect(),
            )
        }
        Format::Json => write_json(
            out,
            rows.iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "t": r.t,
                        "group": r.group,
                        "ref": r.reference_index,
                        "consistent": flag(r.consistent),
                    })
                })
                .collect(),
        ),
    }
}
