//! Single binary exposing the graph toolkit: obstruction family listing,
//! minor search, linkless tests, exhaustive bound verification, conjecture
//! scans, bound evaluation, isomorph-free generation, and graph6 conversion.
//!
//! Graphs travel as graph6 lines on stdin/stdout so subcommands compose via
//! pipes. Exit codes: 0 success/verified, 1 no minor, 2 counterexample or
//! obstruction found, 3 parameter caps exceeded, 64 usage errors, 65 bad
//! input data.

use std::io::{BufRead, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use linkless::extremal::{
    check_conjecture, edge_bound, verify_linkless_bound, verify_mader_bound,
    verify_obstruction_set_bound, BoundName, ConjectureId, RunOptions, VerificationReport,
    Verdict,
};
use linkless::iso::{enumerate, enumerate_fold, enumerate_subtree, ClassFilter, EnumerationSpec, SubtreeToken};
use linkless::transforms::{recognized_name, PetersenFamily};
use linkless::{graph6, named, Graph};

#[derive(Parser)]
#[command(name = "linkless", version, about = "Graph minors, obstruction sets, and exhaustive edge-bound verification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the seven-graph obstruction family generated from K6
    Family {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search a host graph for a minor; prints the branch-set model as JSON
    Minor {
        /// Pattern graph: a name (K6, K_{3,3}, K44_minus, K6_deltaY,
        /// petersen_graph) or a graph6 line
        #[arg(long)]
        pattern: String,
        /// Read the host graph from this file instead of stdin
        #[arg(long)]
        host: Option<PathBuf>,
    },
    /// Test each input graph for linkless embeddability (no obstruction minor)
    Linkless,
    /// Exhaustively verify a proved edge bound at one n
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Scan for counterexamples to an open conjecture at one n
    Conjecture {
        #[arg(value_enum)]
        target: ConjectureTarget,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Evaluate a named edge bound exactly
    Bound {
        /// One of: main, thm31, mader, kp, trfree, trfull
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        t: Option<u64>,
    },
    /// Generate one canonical graph6 line per isomorphism class
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "triangle_free")]
        bipartite: bool,
        #[arg(long)]
        triangle_free: bool,
        #[arg(long)]
        min_edges: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        /// Restrict to one enumeration subtree, e.g. "0.3.1"
        #[arg(long)]
        resume: Option<String>,
    },
    /// Re-encode graph6 lines from stdin; --check requires byte identity
    Convert {
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Cross-validate a sample of scanned graphs with the exhaustive oracle
    #[arg(long)]
    spot_check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Main,
    Thm31,
    Mader,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjectureTarget {
    Trfree,
    Trfull,
    Kp,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn data(message: impl Into<String>) -> Failure {
        Failure { code: 65, message: message.into() }
    }
}

impl From<linkless::Error> for Failure {
    fn from(e: linkless::Error) -> Failure {
        let code = match e {
            linkless::Error::CapExceeded(_) => 3,
            _ => 65,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(64);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Family { format } => family(format),
        Cmd::Minor { pattern, host } => minor(&pattern, host.as_deref()),
        Cmd::Linkless => linkless_cmd(),
        Cmd::Verify { target, run } => verify(target, &run),
        Cmd::Conjecture { target, run } => conjecture(target, &run),
        Cmd::Bound { name, n, p, t } => bound(&name, n, p, t),
        Cmd::Gen { n, bipartite, triangle_free, min_edges, max_edges, connected, jobs, resume } => {
            gen(n, bipartite, triangle_free, min_edges, max_edges, connected, jobs, resume)
        }
        Cmd::Convert { check } => convert(check),
    }
}

fn family(format: Format) -> Result<u8, Failure> {
    let family = PetersenFamily::shared();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Text => {
            // members as pipeable graph6 lines on stdout, table on stderr
            let mut err = std::io::stderr().lock();
            writeln!(err, "{:<5} {:<3} {:<5} {:<15} graph6", "index", "n", "edges", "name").ok();
            for (i, g) in family.members().iter().enumerate() {
                let line = graph6::encode(g);
                writeln!(out, "{line}").ok();
                let name = recognized_name(g).unwrap_or("-");
                writeln!(
                    err,
                    "{:<5} {:<3} {:<5} {:<15} {}",
                    i,
                    g.vertex_count(),
                    g.edge_count(),
                    name,
                    line
                )
                .ok();
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = family
                .members()
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    serde_json::json!({
                        "index": i,
                        "n": g.vertex_count(),
                        "edges": g.edge_count(),
                        "name": recognized_name(g),
                        "graph6": graph6::encode(g),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("serializable")).ok();
        }
    }
    Ok(0)
}

/// A pattern is a graph name or a graph6 line; names win.
fn parse_pattern(pattern: &str) -> Result<Graph, Failure> {
    match named::by_name(pattern) {
        Ok(g) => Ok(g),
        Err(name_err) => graph6::decode(pattern).map_err(|g6_err| {
            Failure::data(format!(
                "pattern is neither a graph name ({name_err}) nor graph6 ({g6_err})"
            ))
        }),
    }
}

fn minor(pattern: &str, host: Option<&std::path::Path>) -> Result<u8, Failure> {
    let pattern = parse_pattern(pattern)?;
    let lines = read_graph_lines(host)?;
    if lines.len() != 1 {
        return Err(Failure::data(format!(
            "minor expects exactly one host graph, found {}",
            lines.len()
        )));
    }
    let host = graph6::decode(&lines[0])?;
    match linkless::find_minor(&host, &pattern) {
        Some(model) => {
            println!("{}", serde_json::to_string(&model).expect("model serializes"));
            Ok(0)
        }
        None => {
            eprintln!("no minor");
            Ok(1)
        }
    }
}

fn linkless_cmd() -> Result<u8, Failure> {
    let lines = read_graph_lines(None)?;
    if lines.is_empty() {
        return Err(Failure::data("no graphs on stdin"));
    }
    let family = PetersenFamily::shared();
    let mut any_obstruction = false;
    for line in &lines {
        let g = graph6::decode(line)?;
        let canonical_line = graph6::encode(&g);
        match linkless::find_obstruction(&g) {
            None => {
                println!("{}", serde_json::json!({ "graph6": canonical_line, "linkless": true }));
            }
            Some(obs) => {
                any_obstruction = true;
                let member = &family.members()[obs.family_index];
                println!(
                    "{}",
                    serde_json::json!({
                        "graph6": canonical_line,
                        "linkless": false,
                        "obstruction": {
                            "family_index": obs.family_index,
                            "member": graph6::encode(member),
                            "name": recognized_name(member),
                            "model": obs.model,
                        },
                    })
                );
            }
        }
    }
    Ok(if any_obstruction { 2 } else { 0 })
}

fn verify(target: VerifyTarget, run: &RunArgs) -> Result<u8, Failure> {
    let opts = RunOptions { jobs: resolve_jobs(run.jobs)?, spot_check: run.spot_check };
    let report = match target {
        VerifyTarget::Main => verify_linkless_bound(run.n, &opts)?,
        VerifyTarget::Thm31 => verify_obstruction_set_bound(run.n, &opts)?,
        VerifyTarget::Mader => {
            let p = run.p.ok_or_else(|| Failure::data("verify mader requires --p"))?;
            verify_mader_bound(p, run.n, &opts)?
        }
    };
    emit_report(&report, run.format)
}

fn conjecture(target: ConjectureTarget, run: &RunArgs) -> Result<u8, Failure> {
    let opts = RunOptions { jobs: resolve_jobs(run.jobs)?, spot_check: run.spot_check };
    let id = match target {
        ConjectureTarget::Trfree => ConjectureId::TrFree,
        ConjectureTarget::Trfull => ConjectureId::TrFull,
        ConjectureTarget::Kp => ConjectureId::Kp,
    };
    if matches!(target, ConjectureTarget::Kp) && run.p.is_none() {
        return Err(Failure::data("conjecture kp requires --p"));
    }
    let report = check_conjecture(id, run.n, run.p, &opts)?;
    emit_report(&report, run.format)
}

fn emit_report(report: &VerificationReport, format: Format) -> Result<u8, Failure> {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    eprintln!("elapsed: {:?}", report.elapsed);
    Ok(match report.verdict {
        Verdict::Verified | Verdict::NoCounterexampleAtN | Verdict::ExceptionOnly => 0,
        Verdict::Counterexample => 2,
    })
}

fn bound(name: &str, n: usize, p: Option<usize>, t: Option<u64>) -> Result<u8, Failure> {
    let name: BoundName = name.parse()?;
    let value = edge_bound(name, n, p, t)?;
    println!("{value}");
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn gen(
    n: usize,
    bipartite: bool,
    triangle_free: bool,
    min_edges: Option<usize>,
    max_edges: Option<usize>,
    connected: bool,
    jobs: Option<u64>,
    resume: Option<String>,
) -> Result<u8, Failure> {
    let filter = if bipartite {
        ClassFilter::Bipartite
    } else if triangle_free {
        ClassFilter::TriangleFree
    } else {
        ClassFilter::All
    };
    let cap = n * n.saturating_sub(1) / 2;
    let spec = EnumerationSpec::new(n, filter)
        .edge_window(min_edges.unwrap_or(0), max_edges.unwrap_or(cap))
        .connected(connected);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Some(token) = resume {
        let token: SubtreeToken = token.parse()?;
        for g in enumerate_subtree(&spec, &token)? {
            writeln!(out, "{}", graph6::encode(&g)).ok();
        }
        return Ok(0);
    }
    let jobs = resolve_jobs(jobs)?;
    if jobs == 1 {
        for g in enumerate(&spec)? {
            writeln!(out, "{}", graph6::encode(&g)).ok();
        }
    } else {
        let lines = enumerate_fold(
            &spec,
            jobs,
            Vec::new,
            |acc: &mut Vec<String>, g| acc.push(graph6::encode(g)),
            |mut a, b| {
                a.extend(b);
                a
            },
        )?;
        for line in lines {
            writeln!(out, "{line}").ok();
        }
    }
    Ok(0)
}

fn convert(check: bool) -> Result<u8, Failure> {
    let lines = read_graph_lines(None)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for line in &lines {
        let g = graph6::decode(line)?;
        let encoded = graph6::encode(&g);
        if check && encoded != line.trim() {
            return Err(Failure::data(format!(
                "round-trip mismatch: input {:?} re-encodes as {:?}",
                line.trim(),
                encoded
            )));
        }
        writeln!(out, "{encoded}").ok();
    }
    Ok(0)
}

/// LINKLESS_JOBS overrides --jobs; default is the available parallelism.
fn resolve_jobs(flag: Option<u64>) -> Result<usize, Failure> {
    if let Ok(env) = std::env::var("LINKLESS_JOBS") {
        let jobs: usize = env
            .trim()
            .parse()
            .map_err(|_| Failure { code: 64, message: format!("LINKLESS_JOBS must be a positive integer, got {env:?}") })?;
        if jobs == 0 {
            return Err(Failure { code: 64, message: "LINKLESS_JOBS must be >= 1".into() });
        }
        return Ok(jobs);
    }
    if let Some(jobs) = flag {
        return Ok(jobs as usize);
    }
    Ok(std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1))
}

/// Non-empty trimmed lines from a file or stdin.
fn read_graph_lines(path: Option<&std::path::Path>) -> Result<Vec<String>, Failure> {
    let raw = match path {
        Some(p) => {
            let mut buf = String::new();
            std::fs::File::open(p)
                .map_err(|e| Failure::data(format!("cannot open {}: {e}", p.display())))?
                .read_to_string(&mut buf)
                .map_err(|e| Failure::data(format!("cannot read {}: {e}", p.display())))?;
            buf
        }
        None => {
            let stdin = std::io::stdin();
            let mut buf = String::new();
            for line in stdin.lock().lines() {
                let line = line.map_err(|e| Failure::data(format!("cannot read stdin: {e}")))?;
                buf.push_str(&line);
                buf.push('\n');
            }
            buf
        }
    };
    Ok(raw
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}
