//! Command-line front end for the tournament toolkit.
//!
//! Exit codes follow the CI convention: 0 when the requested work succeeds
//! (including a verification suite with zero violations), 1 when a suite or
//! audit reports violations, 2 on usage or parse errors. A reader that closes
//! the pipe early ends the run with exit 0.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use trn_core::catalog::{dual_record, finite_catalog, supplemental_records, validate_record};
use trn_core::enumerate::all_tournaments;
use trn_core::tournament::{parse_trn, TrnRecord};
use trn_core::verify::{run_suite, Shard, VerificationReport};
use trn_core::{Digraph, Error, OrientedPathType, Tournament};

#[derive(Parser)]
#[command(
    name = "trn",
    version,
    about = "Oriented Hamiltonian paths in arc-deleted tournaments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every tournament of an order, one trn line per isomorphism class
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Round-robin slice i/k of the stream
        #[arg(long, default_value = "0/1")]
        shard: String,
    },
    /// Search for a spanning path of a given type; prints the witness or NONE
    Embed {
        /// Tournament or arc-deleted digraph as a trn/trnd line
        #[arg(long)]
        trn: String,
        /// Delete the arc between this 1-based pair, e.g. 2,5
        #[arg(long)]
        delete: Option<String>,
        /// Path-type literal, e.g. +(1,2) or -(2,1,1)
        #[arg(long, allow_hyphen_values = true)]
        path: String,
    },
    /// Print the 1-based origins of a path type, in ascending order
    Origins {
        #[arg(long)]
        trn: String,
        #[arg(long)]
        delete: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        path: String,
    },
    /// List, validate, or export the exception catalog
    Catalog {
        /// Recheck every record and its dual against the search engine
        #[arg(long)]
        validate: bool,
        /// Write the catalog as JSON to this path
        #[arg(long, value_name = "PATH")]
        export: Option<PathBuf>,
    },
    /// Run an exhaustive verification suite
    Verify {
        /// One of: main, ht, corollaries, redei, grunbaum, observations
        #[arg(long)]
        suite: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value = "0/1")]
        shard: String,
        /// Also write the full report as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Accepted for interface stability; suites currently run on one thread
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

fn main() {
    std::process::exit(run(std::env::args_os()));
}

fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match dispatch(cli, &mut out) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            2
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Failures surfaced by `dispatch`: domain errors report to stderr and exit 2,
/// a stdout pipe closed by the reader ends the run with exit 0.
enum CliError {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn dispatch(cli: Cli, out: &mut impl Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Enumerate { order, shard } => {
            let shard = Shard::parse(&shard)?;
            for (i, t) in all_tournaments(order)?.iter().enumerate() {
                if i as u64 % shard.count == shard.index {
                    writeln!(out, "{}", t.to_trn())?;
                }
            }
            Ok(0)
        }
        Command::Embed { trn, delete, path } => {
            let p = OrientedPathType::parse(&path)?;
            match input_digraph(&trn, delete.as_deref())? {
                Input::Intact(t) => print_embed(&t, &p, out),
                Input::Deleted(d) => print_embed(&d, &p, out),
            }
        }
        Command::Origins { trn, delete, path } => {
            let p = OrientedPathType::parse(&path)?;
            let origins = match input_digraph(&trn, delete.as_deref())? {
                Input::Intact(t) => trn_core::embed::origins(&t, &p)?,
                Input::Deleted(d) => trn_core::embed::origins(&d, &p)?,
            };
            let labels: Vec<String> = origins.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(out, "{}", labels.join(" "))?;
            Ok(0)
        }
        Command::Catalog { validate, export } => catalog_command(validate, export, out),
        Command::Verify {
            suite,
            order,
            shard,
            json,
            workers,
        } => {
            if workers == 0 {
                return Err(Error::InvalidArgument("--workers must be at least 1".into()).into());
            }
            let shard = Shard::parse(&shard)?;
            let report = run_suite(&suite, order, shard)?;
            print_report(out, &report)?;
            if let Some(path) = json {
                let body = serde_json::to_string_pretty(&report)
                    .map_err(|e| Error::InvalidArgument(format!("serializing report: {e}")))?;
                std::fs::write(&path, body).map_err(|e| {
                    Error::InvalidArgument(format!("writing {}: {e}", path.display()))
                })?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

enum Input {
    Intact(Tournament),
    Deleted(trn_core::ArcDeletedDigraph),
}

fn input_digraph(trn: &str, delete: Option<&str>) -> Result<Input, Error> {
    let record = parse_trn(trn)?;
    match (record, delete) {
        (TrnRecord::Tournament(t), None) => Ok(Input::Intact(t)),
        (TrnRecord::Tournament(t), Some(pair)) => {
            let (x, y) = parse_pair(pair)?;
            Ok(Input::Deleted(t.delete_arc(x, y)?))
        }
        (TrnRecord::ArcDeleted(d), None) => Ok(Input::Deleted(d)),
        (TrnRecord::ArcDeleted(_), Some(_)) => Err(Error::InvalidArgument(
            "--delete cannot be combined with a trnd line, which already names the missing pair"
                .into(),
        )),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), Error> {
    let bad = || {
        Error::InvalidArgument(format!(
            "--delete expects two 1-based labels x,y, got '{s}'"
        ))
    };
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let x: usize = a.trim().parse().map_err(|_| bad())?;
    let y: usize = b.trim().parse().map_err(|_| bad())?;
    if x == 0 || y == 0 {
        return Err(bad());
    }
    Ok((x - 1, y - 1))
}

fn print_embed<D: Digraph>(
    d: &D,
    p: &OrientedPathType,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    match trn_core::embed::contains_path(d, p)? {
        Some(w) => writeln!(out, "{w}")?,
        None => writeln!(out, "NONE")?,
    }
    Ok(0)
}

fn catalog_command(
    validate: bool,
    export: Option<PathBuf>,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let records = finite_catalog();
    let supplements = supplemental_records();
    let record_json = |r: &trn_core::catalog::FiniteExceptionRecord| {
        serde_json::json!({
            "id": r.id,
            "tournament": r.tournament.to_trn(),
            "path_type": r.path_type.to_string(),
            "non_origins": r.non_origins.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "witnesses": r.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "flags": r.flags,
        })
    };
    let exporting = export.is_some();
    if let Some(path) = export {
        let body = serde_json::json!({
            "schema": "trn-catalog/v1",
            "records": records.iter().map(record_json).collect::<Vec<_>>(),
            "supplements": supplements.iter().map(record_json).collect::<Vec<_>>(),
        });
        let text = serde_json::to_string_pretty(&body)
            .map_err(|e| Error::InvalidArgument(format!("serializing catalog: {e}")))?;
        std::fs::write(&path, text)
            .map_err(|e| Error::InvalidArgument(format!("writing {}: {e}", path.display())))?;
        writeln!(
            out,
            "wrote {} records and {} supplements to {}",
            records.len(),
            supplements.len(),
            path.display()
        )?;
    }
    if validate {
        let mut failed = 0usize;
        let mut total = 0usize;
        for r in records.iter().chain(supplements) {
            for entry in [r.clone(), dual_record(r)] {
                total += 1;
                let report = validate_record(&entry);
                if report.ok {
                    writeln!(out, "ok   {}", report.id)?;
                } else {
                    failed += 1;
                    writeln!(out, "FAIL {}", report.id)?;
                    for f in &report.failures {
                        writeln!(out, "       {f}")?;
                    }
                }
                for note in &report.notes {
                    writeln!(out, "       note: {note}")?;
                }
            }
        }
        writeln!(
            out,
            "{} of {total} records valid (including duals)",
            total - failed
        )?;
        return Ok(if failed == 0 { 0 } else { 1 });
    }
    if !exporting && !validate {
        for r in records.iter().chain(supplements) {
            writeln!(
                out,
                "{:10} {:24} {:14} non-origins {}",
                r.id,
                r.tournament.to_trn(),
                r.path_type.to_string(),
                r.non_origins
            )?;
        }
    }
    Ok(0)
}

fn print_report(out: &mut impl Write, report: &VerificationReport) -> io::Result<()> {
    let order = report
        .order
        .map(|n| format!(" order={n}"))
        .unwrap_or_default();
    writeln!(
        out,
        "suite={}{order} shard={} instances={} violations={} wall_ms={}",
        report.suite,
        report.shard,
        report.instances_checked,
        report.violation_count,
        report.wall_ms
    )?;
    for note in &report.notes {
        writeln!(out, "note: {note}")?;
    }
    for v in report.violations.iter().take(10) {
        let mut line = format!("violation: {}", v.tournament);
        if let Some(pair) = &v.pair {
            line.push_str(&format!(" pair {pair}"));
        }
        if let Some(p) = &v.path_type {
            line.push_str(&format!(" type {p}"));
        }
        line.push_str(&format!(
            "; expected {}; observed {}",
            v.expected, v.observed
        ));
        writeln!(out, "{line}")?;
    }
    if report.violations.len() > 10 {
        writeln!(
            out,
            "... {} more recorded violations",
            report.violations.len() - 10
        )?;
    }
    Ok(())
}
