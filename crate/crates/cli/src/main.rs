//! `bachet` — count, list, and cross-check minimum-size two-pan balance
//! weight sets.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or
//! precondition error, 3 enumeration above the oracle cap, 4 unreadable
//! reference b-file.

mod cache;
mod output;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bachet_core::counting::{table_with, triplicate_report, MemoTable};
use bachet_core::model::{min_parts, span_of};
use bachet_core::oracle::enumerate_feasible;
use bachet_core::verify::{first_mismatch, verify_range};
use bachet_core::bfile::{bundled_a005704, BFile};

use output::{CountRow, EnumRow, Format, OeisRow, VerifyRowOut};

const DEFAULT_ORACLE_CAP: u64 = 2000;

/// The memo is one in-memory big integer per n; refuse requests that
/// could only end in an OOM kill.
const MAX_TABLE_N: u64 = 100_000_000;

#[derive(Parser)]
#[command(
    name = "bachet",
    version,
    about = "Minimum-size weight sets that weigh every integral load 1..=n on a two-pan balance"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Persistent t-value cache, read and updated by `count` and `table`
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Print work statistics to stderr
    #[arg(long, global = true)]
    stats: bool,

    /// Upper bound on n for brute-force enumeration commands
    #[arg(
        long,
        global = true,
        env = "BACHET_ORACLE_CAP",
        default_value_t = DEFAULT_ORACLE_CAP,
        value_name = "N"
    )]
    oracle_cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print t(n), the number of feasible partitions of n
    Count { n: u64 },
    /// List every feasible partition of n in lexicographic order
    Enumerate {
        n: u64,
        /// Print at most this many partitions, then a `...` marker row
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Compare the counting recursion against brute-force enumeration
    Verify { n_lo: u64, n_hi: u64 },
    /// Print t(1..=n_max) with part counts and spans
    Table { n_max: u64 },
    /// Triplicate report: span-B t values against the A005704 reference
    Oeis {
        m: u32,
        /// Reference b-file; defaults to the bundled A005704 terms
        #[arg(long, value_name = "PATH")]
        bfile: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        fail(1, format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if cli.oracle_cap != DEFAULT_ORACLE_CAP {
        eprintln!(
            "warning: oracle cap overridden to {} (default {DEFAULT_ORACLE_CAP}); \
             enumeration cost grows quickly with n",
            cli.oracle_cap
        );
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match &cli.command {
        Command::Count { n } => cmd_count(cli, &mut out, *n)?,
        Command::Enumerate { n, limit } => cmd_enumerate(cli, &mut out, *n, *limit)?,
        Command::Verify { n_lo, n_hi } => cmd_verify(cli, &mut out, *n_lo, *n_hi)?,
        Command::Table { n_max } => cmd_table(cli, &mut out, *n_max)?,
        Command::Oeis { m, bfile } => cmd_oeis(cli, &mut out, *m, bfile.as_deref())?,
    };
    out.flush()?;
    Ok(code)
}

/// Memo seeded from the cache when one is given and valid.
fn load_memo(cli: &Cli) -> (MemoTable, u64) {
    let Some(path) = &cli.cache else {
        return (MemoTable::new(), 0);
    };
    match cache::load(path) {
        Ok(Some(values)) => {
            let loaded = values.len() as u64;
            match MemoTable::from_prefix(values) {
                Ok(memo) => (memo, loaded),
                Err(e) => {
                    eprintln!("warning: ignoring cache {}: {e}", path.display());
                    (MemoTable::new(), 0)
                }
            }
        }
        Ok(None) => (MemoTable::new(), 0),
        Err(reject) => {
            eprintln!("warning: ignoring cache {}: {reject}", path.display());
            (MemoTable::new(), 0)
        }
    }
}

fn save_memo(cli: &Cli, memo: &MemoTable) {
    if let Some(path) = &cli.cache {
        if let Err(e) = cache::save(path, memo.values()) {
            eprintln!("warning: could not write cache {}: {e}", path.display());
        }
    }
}

fn memo_stats(cli: &Cli, loaded: u64, memo: &MemoTable) {
    if cli.stats {
        let fresh_base = if loaded == 0 { 2 } else { loaded };
        eprintln!("stats: cache entries loaded: {loaded}");
        eprintln!("stats: t values computed: {}", memo.len() - fresh_base);
    }
}

fn count_row(memo: &MemoTable, n: u64) -> CountRow {
    CountRow {
        n,
        m: min_parts(n).ok(),
        span: span_of(n).ok().map(|sc| sc.span.to_string()),
        t: memo.get(n).expect("ensured by caller").to_string(),
    }
}

fn cmd_count(cli: &Cli, out: &mut impl Write, n: u64) -> Result<u8, Failure> {
    if n > MAX_TABLE_N {
        return Err(fail(2, format!("n = {n} needs a table beyond {MAX_TABLE_N} entries")));
    }
    let (mut memo, loaded) = load_memo(cli);
    memo.ensure(n);
    let row = count_row(&memo, n);
    output::emit_count(out, &[row], cli.format)?;
    save_memo(cli, &memo);
    memo_stats(cli, loaded, &memo);
    Ok(0)
}

fn cmd_enumerate(
    cli: &Cli,
    out: &mut impl Write,
    n: u64,
    limit: Option<u64>,
) -> Result<u8, Failure> {
    if n == 0 {
        return Err(fail(2, "n must be at least 1"));
    }
    if n > cli.oracle_cap {
        return Err(fail(
            3,
            format!(
                "n = {n} is above the enumeration cap {}; use `count {n}` for the count, \
                 or raise --oracle-cap / BACHET_ORACLE_CAP",
                cli.oracle_cap
            ),
        ));
    }
    let result = enumerate_feasible(n).map_err(|e| fail(2, e.to_string()))?;
    let mut rows: Vec<EnumRow> = result
        .partitions
        .iter()
        .map(|p| EnumRow {
            n,
            partition: p.to_string(),
        })
        .collect();
    if let Some(limit) = limit {
        if (limit as usize) < rows.len() {
            rows.truncate(limit as usize);
            rows.push(EnumRow {
                n,
                partition: "...".to_string(),
            });
        }
    }
    output::emit_enumerate(out, &rows, cli.format)?;
    if cli.stats {
        eprintln!("stats: feasible partitions: {}", result.count);
    }
    Ok(0)
}

fn cmd_verify(cli: &Cli, out: &mut impl Write, n_lo: u64, n_hi: u64) -> Result<u8, Failure> {
    if n_lo == 0 || n_lo > n_hi {
        return Err(fail(2, format!("need 1 <= n_lo <= n_hi, got {n_lo} {n_hi}")));
    }
    if n_hi > cli.oracle_cap {
        return Err(fail(
            2,
            format!(
                "range end {n_hi} is above the oracle cap {}; raise --oracle-cap / BACHET_ORACLE_CAP",
                cli.oracle_cap
            ),
        ));
    }
    let rows = verify_range(n_lo, n_hi).map_err(|e| fail(2, e.to_string()))?;
    let out_rows: Vec<VerifyRowOut> = rows
        .iter()
        .map(|r| VerifyRowOut {
            n: r.n,
            recursion: r.recursion.to_string(),
            oracle: r.oracle.to_string(),
            matched: r.matched,
        })
        .collect();
    output::emit_verify(out, &out_rows, cli.format)?;
    if cli.stats {
        eprintln!("stats: n checked: {}", rows.len());
    }
    if let Some(bad) = first_mismatch(&rows) {
        eprintln!(
            "first mismatch at n = {}: recursion {} vs oracle {}",
            bad.n, bad.recursion, bad.oracle
        );
        return Ok(1);
    }
    Ok(0)
}

fn cmd_table(cli: &Cli, out: &mut impl Write, n_max: u64) -> Result<u8, Failure> {
    if n_max == 0 {
        return Err(fail(2, "n_max must be at least 1"));
    }
    if n_max > MAX_TABLE_N {
        return Err(fail(2, format!("n_max = {n_max} needs a table beyond {MAX_TABLE_N} entries")));
    }
    let (mut memo, loaded) = load_memo(cli);
    let rows = table_with(&mut memo, n_max).map_err(|e| fail(2, e.to_string()))?;
    let out_rows: Vec<CountRow> = rows
        .iter()
        .map(|r| CountRow {
            n: r.n,
            m: Some(r.m),
            span: r.span.map(|s| s.to_string()),
            t: r.t.to_string(),
        })
        .collect();
    output::emit_count(out, &out_rows, cli.format)?;
    save_memo(cli, &memo);
    memo_stats(cli, loaded, &memo);
    Ok(0)
}

fn cmd_oeis(cli: &Cli, out: &mut impl Write, m: u32, bfile: Option<&Path>) -> Result<u8, Failure> {
    if m < 3 {
        return Err(fail(2, format!("m must be at least 3, got {m}")));
    }
    if m > 20 {
        return Err(fail(2, format!("m = {m} is out of reach: the span top (3^m - 1)/2 exceeds any practical table")));
    }
    let reference: BFile = match bfile {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| fail(4, format!("cannot read b-file {}: {e}", path.display())))?;
            BFile::parse(&text)
                .map_err(|e| fail(4, format!("b-file {}: {e}", path.display())))?
        }
        None => bundled_a005704(),
    };
    let report = triplicate_report(m, &reference).map_err(|e| fail(4, e.to_string()))?;
    match report.alignment {
        Some(a) => eprintln!("alignment: group g pairs with reference index g + {a}"),
        None => eprintln!("alignment: none found"),
    }
    let mut rows = Vec::new();
    for g in &report.groups {
        for (n, v) in g.ns.iter().zip(&g.values) {
            rows.push(OeisRow {
                n: *n,
                t: v.to_string(),
                group: g.index,
                reference_index: g.reference_index,
                consistent: g.consistent,
            });
        }
    }
    output::emit_oeis(out, &rows, cli.format)?;
    if cli.stats {
        let complete = report.groups.iter().filter(|g| g.complete).count();
        eprintln!(
            "stats: groups: {} ({} complete)",
            report.groups.len(),
            complete
        );
    }
    Ok(0)
}
