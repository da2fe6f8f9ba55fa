use std::collections::HashSet;
use std::fs::{self, OpenOptions};
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use gemkit::census::{
    census_header, census_line, enumerate_gems, parse_census_lines, verify_table1, CensusOptions,
};
use gemkit::code::{canonical_code, parse_code, read_code_records, CodeRecord};
use gemkit::corpus::table1;
use gemkit::covering::{derived_graph, find_admissible_cyclic_coverings, free_edge_triples, is_admissible};
use gemkit::topology::{boundary_profile, first_homology, invariants, HomologyGroup, InvariantReport, SurfaceType};
use rayon::prelude::*;
use serde::Serialize;

/// Tools for 4-colored graphs (gems) representing 3-manifolds.
#[derive(Parser)]
#[command(name = "gemkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse each code and print OK or the error.
    Validate { file: PathBuf },
    /// Print the invariant report of each code as JSON lines.
    Invariants { file: PathBuf },
    /// Print the canonical code of each code.
    Canon { file: PathBuf },
    /// Search admissible Z_n coverings of a base graph.
    Cover {
        #[arg(long)]
        code: String,
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Enumerate connected bipartite gems of one order.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        max_results: Option<usize>,
        /// Append entries to a census file instead of printing JSON lines.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Raise the order cap to 12.
        #[arg(long)]
        long_run: bool,
    },
    /// Verify the bundled order-14 corpus.
    Table1,
}

/// Exit status: 1 for failed verification, 2 for bad input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Ok = 0,
    Failed = 1,
    BadInput = 2,
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn label(rec: &CodeRecord) -> String {
    rec.name.clone().unwrap_or_else(|| format!("line{}", rec.line))
}

fn validate(text: &str, out: &mut impl Write) -> anyhow::Result<Status> {
    let mut status = Status::Ok;
    for rec in read_code_records(text) {
        match parse_code(&rec.code) {
            Ok(g) => writeln!(
                out,
                "OK\t{}\t{}\torder={} connected={}",
                label(&rec),
                rec.code,
                g.order(),
                g.is_connected()
            )?,
            Err(e) => {
                status = Status::Failed;
                writeln!(out, "ERROR\t{}\t{}\t{e}", label(&rec), rec.code)?;
            }
        }
    }
    Ok(status)
}

fn invariant_reports(text: &str, out: &mut impl Write) -> anyhow::Result<Status> {
    let records = read_code_records(text);
    let results: Vec<Result<InvariantReport, String>> = records
        .par_iter()
        .map(|rec| {
            let g = parse_code(&rec.code).map_err(|e| e.to_string())?;
            Ok(InvariantReport {
                name: label(rec),
                code: rec.code.clone(),
                invariants: invariants(&g).map_err(|e| e.to_string())?,
            })
        })
        .collect();
    let mut status = Status::Ok;
    for (rec, res) in records.iter().zip(results) {
        match res {
            Ok(report) => writeln!(out, "{}", serde_json::to_string(&report)?)?,
            Err(e) => {
                status = Status::BadInput;
                eprintln!("line {}: {e}", rec.line);
            }
        }
    }
    Ok(status)
}

fn canon(text: &str, out: &mut impl Write) -> anyhow::Result<Status> {
    let records = read_code_records(text);
    let results: Vec<Result<String, String>> = records
        .par_iter()
        .map(|rec| {
            let g = parse_code(&rec.code).map_err(|e| e.to_string())?;
            Ok(canonical_code(&g).map_err(|e| e.to_string())?.to_string())
        })
        .collect();
    let mut status = Status::Ok;
    for (rec, res) in records.iter().zip(results) {
        match res {
            Ok(code) => match &rec.name {
                Some(name) => writeln!(out, "{name}\t{code}")?,
                None => writeln!(out, "{code}")?,
            },
            Err(e) => {
                status = Status::BadInput;
                eprintln!("line {}: {e}", rec.line);
            }
        }
    }
    Ok(status)
}

#[derive(Serialize)]
struct CoverSolution {
    /// Voltages on the edges outside the spanning tree, as (tail vertex,
    /// color, value) with edges oriented from the first color class.
    voltages: Vec<(usize, usize, u32)>,
    derived_code: String,
    admissible: bool,
    boundary: Vec<SurfaceType>,
    h1: HomologyGroup,
}

#[derive(Serialize)]
struct CoverReport {
    base_code: String,
    n: u32,
    solutions: Vec<CoverSolution>,
}

fn cover(code: &str, degree: u32, limit: usize, out: &mut impl Write) -> anyhow::Result<Status> {
    let base = match parse_code(code) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{code}: {e}");
            return Ok(Status::BadInput);
        }
    };
    let found = match find_admissible_cyclic_coverings(&base, degree, limit) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            return Ok(Status::BadInput);
        }
    };
    let solutions = found
        .par_iter()
        .map(|va| {
            let (total, map) = derived_graph(va);
            Ok(CoverSolution {
                voltages: free_edge_triples(va),
                derived_code: canonical_code(&total)?.to_string(),
                admissible: is_admissible(&map)?,
                boundary: boundary_profile(&total)?.components,
                h1: first_homology(&total)?,
            })
        })
        .collect::<gemkit::Result<Vec<_>>>()?;
    let report = CoverReport {
        base_code: code.to_string(),
        n: degree,
        solutions,
    };
    writeln!(out, "{}", serde_json::to_string(&report)?)?;
    if report.solutions.is_empty() {
        eprintln!("no admissible connected Z_{degree} covering");
        return Ok(Status::Failed);
    }
    Ok(Status::Ok)
}

/// Append census entries to `path`, creating it with a header when absent.
/// An existing file must carry the same header; entries already present
/// are not written again.
fn append_census(
    path: &Path,
    order: usize,
    opts: CensusOptions,
    lines: &[(String, String)],
) -> anyhow::Result<usize> {
    let header = census_header(order, opts);
    let existing = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
        Err(e) => return Err(e).with_context(|| format!("reading {}", path.display())),
    };
    let mut known = HashSet::new();
    if !existing.is_empty() {
        if !existing.starts_with(&header) {
            bail!("{} has a different census header", path.display());
        }
        for entry in parse_census_lines(&existing).map_err(|e| anyhow!("{}: {e}", path.display()))? {
            known.insert(entry.canonical);
        }
    }
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    if existing.is_empty() {
        file.write_all(header.as_bytes())?;
    }
    let mut written = 0;
    for (canonical, line) in lines {
        if !known.contains(canonical) {
            writeln!(file, "{line}")?;
            written += 1;
        }
    }
    Ok(written)
}

fn census(
    order: usize,
    max_results: Option<usize>,
    out_file: Option<&Path>,
    long_run: bool,
    out: &mut impl Write,
) -> anyhow::Result<Status> {
    let opts = CensusOptions { long_run };
    let mut entries = match enumerate_gems(order, opts) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{e}");
            return Ok(Status::BadInput);
        }
    };
    let total = entries.len();
    if let Some(k) = max_results {
        entries.truncate(k);
    }
    match out_file {
        Some(path) => {
            let lines: Vec<(String, String)> = entries
                .iter()
                .map(|e| (e.canonical.clone(), census_line(e)))
                .collect();
            let written = match append_census(path, order, opts, &lines) {
                Ok(w) => w,
                Err(e) => {
                    eprintln!("{e:#}");
                    return Ok(Status::BadInput);
                }
            };
            eprintln!("order {order}: {total} classes, {written} new entries written to {}", path.display());
        }
        None => {
            for e in &entries {
                writeln!(out, "{}", serde_json::to_string(e)?)?;
            }
            eprintln!("order {order}: {total} classes");
        }
    }
    Ok(Status::Ok)
}

fn run_table1(out: &mut impl Write) -> anyhow::Result<Status> {
    let report = verify_table1(&table1());
    for row in &report.rows {
        let h1 = row.h1.as_ref().map_or("?".to_string(), ToString::to_string);
        if row.passed {
            writeln!(out, "PASS\t{}\t{}\ttori={}\th1={h1}", row.name, row.code, row.boundary_components)?;
        } else {
            writeln!(out, "FAIL\t{}\t{}\t{}", row.name, row.code, row.failures.join("; "))?;
        }
    }
    if report.distinct_canonical != report.rows.len() {
        eprintln!(
            "only {} distinct canonical codes among {} rows",
            report.distinct_canonical,
            report.rows.len()
        );
    }
    Ok(if report.passed { Status::Ok } else { Status::Failed })
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(value) = std::env::var("GEMKIT_THREADS") {
        let n: usize = value
            .parse()
            .map_err(|_| anyhow!("GEMKIT_THREADS must be a positive integer, got {value:?}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    configure_threads()?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let status = match cli.command {
        Command::Validate { file } => validate(&read_input(&file)?, &mut out)?,
        Command::Invariants { file } => invariant_reports(&read_input(&file)?, &mut out)?,
        Command::Canon { file } => canon(&read_input(&file)?, &mut out)?,
        Command::Cover { code, degree, limit } => cover(&code, degree, limit, &mut out)?,
        Command::Census {
            order,
            max_results,
            out: out_file,
            long_run,
        } => census(order, max_results, out_file.as_deref(), long_run, &mut out)?,
        Command::Table1 => run_table1(&mut out)?,
    };
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(Status::BadInput as u8)
        }
    }
}
