//! Command-line front end. Exit codes: 0 success, 1 failed verification or
//! I/O error, 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{self, certificate};
use crate::exactpoly::IntPoly;
use crate::families::{self, Family};
use crate::graph::{SignedCompleteGraph, SimpleGraph};
use crate::perturb::{self, TraceStep};
use crate::quotient::collapsed_char_poly;
use crate::report::{self, ReportError};
use crate::spectra::{self, DEFAULT_TOL};
use crate::verify::{self, VerificationReport, DEFAULT_MAX_ENUMERATED_K};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const WORKERS_ENV: &str = "THETA_SPECTRA_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "theta-spectra", version, about = "Index of signed complete graphs with bicyclic negative part")]
struct Cli {
    /// Worker threads [default: available parallelism]
    #[arg(long, global = true, env = WORKERS_ENV, value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Index, spectrum and principal eigenvector as JSON
    Index {
        #[command(flatten)]
        source: Source,
        /// Jacobi off-diagonal tolerance
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive_f64)]
        tol: f64,
    },
    /// Exact characteristic polynomial as JSON
    Charpoly {
        #[command(flatten)]
        source: Source,
        /// Divide out the factorization's power of (λ+1)
        #[arg(long)]
        quotient: bool,
    },
    /// graph6 of a family member's negative edges on n vertices
    Family {
        #[command(subcommand)]
        which: FamilyCmd,
    },
    /// All connected bicyclic graphs on v vertices, one graph6 line each
    Enumerate {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded hill climbing over sign swaps
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 32)]
        seeds: u64,
        #[arg(long, default_value_t = 5000)]
        max_iters: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exit 1 if any gating point fails
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum FamilyCmd {
    Theta1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    Theta2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Theta1,
    Theta2,
}

#[derive(Debug, Args)]
struct Source {
    /// Negative edges as graph6; the graph's order is n unless --n is larger
    #[arg(long, conflicts_with = "family")]
    graph6: Option<String>,
    #[arg(long, requires = "n")]
    family: Option<FamilyName>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Factorizations,
    Identities,
    Signs,
    Ordering,
    Dominance,
    Bounds,
    Theorem,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    suite: Suite,
    /// Orders, `a:b[:step]` inclusive or a single value
    #[arg(long, value_parser = parse_range_arg, conflicts_with = "n_offset")]
    n: Option<RangeArg>,
    /// Negative edge counts, `a:b[:step]` or a single value
    #[arg(long, value_parser = parse_range_arg)]
    k: Option<RangeArg>,
    /// Orders given relative to k, comma separated (n = k + offset)
    #[arg(long, value_delimiter = ',')]
    n_offset: Option<Vec<usize>>,
    /// Largest k whose enumerated negative parts join the bounds suite
    #[arg(long, default_value_t = DEFAULT_MAX_ENUMERATED_K)]
    max_enumerated_k: usize,
    /// JSON report path [default: stdout]
    #[arg(long)]
    out: Option<PathBuf>,
    /// Full ranking as CSV (theorem suite)
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct RangeArg(Vec<usize>);

fn parse_range_arg(s: &str) -> Result<RangeArg, String> {
    parse_range(s).map(RangeArg)
}

/// `a`, `a:b` or `a:b:step`, inclusive.
pub fn parse_range(s: &str) -> Result<Vec<usize>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |p: &str| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}"));
    let (a, b, step) = match parts.as_slice() {
        [a] => (num(a)?, num(a)?, 1),
        [a, b] => (num(a)?, num(b)?, 1),
        [a, b, c] => (num(a)?, num(b)?, num(c)?),
        _ => return Err(format!("expected a:b[:step], got {s:?}")),
    };
    if step == 0 {
        return Err("step must be positive".to_owned());
    }
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a..=b).step_by(step).collect())
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failure(String),
}

impl From<ReportError> for CliError {
    fn from(e: ReportError) -> Self {
        CliError::Failure(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Some(w) = cli.workers {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w as usize)
            .build_global();
    }
    match execute(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAIL
        }
    }
}

fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Index { source, tol } => {
            let (label, g) = resolve(&source)?;
            let spec = spectra::spectrum(&g, tol).map_err(|e| CliError::Failure(e.to_string()))?;
            emit(
                None,
                &IndexReport {
                    source: label,
                    n: g.order(),
                    negative_edges: g.negative_edge_count(),
                    lambda1: spec.index(),
                    residual: spec.residual,
                    spectrum: spec.eigenvalues,
                    principal_vector: spec.principal_vector,
                },
            )?;
        }
        Command::Charpoly { source, quotient } => {
            let (label, g) = resolve(&source)?;
            let family = family_of(&source)?;
            let full = g.adjacency_matrix().char_poly_exact();
            let (poly, divided) = match (quotient, family) {
                (false, _) => (full, 0),
                (true, Some(f)) => (f.quotient_poly(), f.plus_one_power()),
                (true, None) => {
                    let q = collapsed_char_poly(&g);
                    let e = g.order() - q.degree().unwrap_or(0);
                    (q, e)
                }
            };
            emit(
                None,
                &CharpolyReport {
                    source: label,
                    degree: poly.degree().unwrap_or(0),
                    plus_one_power_removed: divided,
                    pretty: poly.to_pretty(),
                    coefficients: poly,
                },
            )?;
        }
        Command::Family { which } => {
            let fam = match which {
                FamilyCmd::Theta1 { n, s, t } => Family::theta1(n, s, t),
                FamilyCmd::Theta2 { n, k } => Family::theta2(n, k),
            }
            .map_err(|e| usage(e.to_string()))?;
            println!("{}", fam.graph().negative_edges().to_graph6());
        }
        Command::Enumerate { vertices, out } => {
            let certs = enumerate::bicyclic_certificates(vertices).map_err(|e| usage(e.to_string()))?;
            let mut text = String::with_capacity(certs.len() * (vertices + 2));
            for c in &certs {
                text.push_str(c);
                text.push('\n');
            }
            write_text(out.as_deref(), &text)?;
        }
        Command::Search {
            n,
            k,
            seeds,
            max_iters,
            out,
        } => {
            if k < 6 || n < k {
                return Err(usage(format!("search needs k ≥ 6 and n ≥ k, got n = {n}, k = {k}")));
            }
            emit(out.as_deref(), &search_report(n, k, seeds, max_iters))?;
        }
        Command::Verify(args) => return run_verify(args),
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct IndexReport {
    source: String,
    n: usize,
    negative_edges: usize,
    #[serde(serialize_with = "report::ser_sig15")]
    lambda1: f64,
    residual: f64,
    #[serde(serialize_with = "report::ser_sig15_vec")]
    spectrum: Vec<f64>,
    #[serde(serialize_with = "report::ser_sig15_vec")]
    principal_vector: Vec<f64>,
}

#[derive(Serialize)]
struct CharpolyReport {
    source: String,
    degree: usize,
    plus_one_power_removed: usize,
    /// Ascending, as decimal strings.
    coefficients: IntPoly,
    pretty: String,
}

fn family_of(src: &Source) -> Result<Option<Family>, CliError> {
    let Some(name) = src.family else {
        return Ok(None);
    };
    let n = src.n.expect("clap requires --n with --family");
    let missing = |flag: &str| usage(format!("--family {name:?} needs --{flag}"));
    let fam = match name {
        FamilyName::Theta1 => {
            let s = src.s.ok_or_else(|| missing("s"))?;
            let t = src.t.ok_or_else(|| missing("t"))?;
            Family::theta1(n, s, t)
        }
        FamilyName::Theta2 => Family::theta2(n, src.k.ok_or_else(|| missing("k"))?),
    };
    fam.map(Some).map_err(|e| usage(e.to_string()))
}

fn resolve(src: &Source) -> Result<(String, SignedCompleteGraph), CliError> {
    if let Some(fam) = family_of(src)? {
        return Ok((fam.label(), fam.graph()));
    }
    let Some(code) = &src.graph6 else {
        return Err(usage("give --graph6 or --family"));
    };
    let b = SimpleGraph::from_graph6(code).map_err(|e| usage(format!("--graph6: {e}")))?;
    let n = src.n.unwrap_or(b.vertex_count()).max(b.vertex_count());
    if n == 0 {
        return Err(usage("--graph6: empty graph"));
    }
    let g = SignedCompleteGraph::embed(&b, n).map_err(|e| usage(e.to_string()))?;
    Ok((format!("graph6:{code}"), g))
}

fn write_text(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Failure(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Failure(format!("stdout: {e}"))),
    }
}

fn emit<T: Serialize>(path: Option<&Path>, value: &T) -> Result<(), CliError> {
    match path {
        Some(p) => Ok(report::write_json(p, value)?),
        None => write_text(None, &report::to_json_string(value)),
    }
}

#[derive(Serialize)]
struct SearchRun {
    seed: u64,
    start: String,
    #[serde(serialize_with = "report::ser_sig15")]
    start_index: f64,
    best: String,
    best_certificate: String,
    #[serde(serialize_with = "report::ser_sig15")]
    best_index: f64,
    reached_theta2: bool,
    local_optimum: bool,
    trace: Vec<TraceStep>,
}

#[derive(Serialize)]
struct SearchReport {
    n: usize,
    k: usize,
    seeds: u64,
    max_iters: usize,
    theta2_certificate: String,
    theta2_hits: usize,
    /// Distinct local optima by certificate, with how many seeds reached each.
    optima: Vec<(String, usize)>,
    runs: Vec<SearchRun>,
}

fn search_report(n: usize, k: usize, seeds: u64, max_iters: usize) -> SearchReport {
    let theta2 = certificate(&families::theta2_negative_part(k));
    let runs: Vec<SearchRun> = (0..seeds)
        .into_par_iter()
        .map(|seed| {
            let o = perturb::local_search_max(n, k, seed, max_iters).expect("parameters checked");
            let best_certificate = certificate(&o.best.negative_part());
            SearchRun {
                seed,
                start: o.start.negative_edges().to_graph6(),
                start_index: o.start_index,
                best: o.best.negative_edges().to_graph6(),
                reached_theta2: best_certificate == theta2,
                best_certificate,
                best_index: o.best_index,
                local_optimum: o.local_optimum,
                trace: o.trace,
            }
        })
        .collect();
    let mut optima = std::collections::BTreeMap::new();
    for r in &runs {
        *optima.entry(r.best_certificate.clone()).or_insert(0) += 1;
    }
    SearchReport {
        n,
        k,
        seeds,
        max_iters,
        theta2_hits: runs.iter().filter(|r| r.reached_theta2).count(),
        theta2_certificate: theta2,
        optima: optima.into_iter().collect(),
        runs,
    }
}

fn default_grid(suite: Suite) -> (Vec<usize>, Vec<usize>, Option<Vec<usize>>) {
    let n: Vec<usize> = (12..=36).step_by(4).collect();
    match suite {
        Suite::Factorizations | Suite::Identities => (n, (8..=14).collect(), None),
        Suite::Signs => (vec![], (15..=18).collect(), Some(vec![20, 25])),
        Suite::Dominance => (vec![], (15..=18).collect(), Some(vec![20])),
        Suite::Ordering => (vec![], vec![15, 16], Some(vec![20])),
        Suite::Bounds => (vec![28], (8..=10).collect(), None),
        Suite::Theorem => (vec![35], vec![15], None),
    }
}

fn grid_pairs(args: &VerifyArgs) -> Vec<(usize, usize)> {
    let (dn, dk, doff) = default_grid(args.suite);
    let ks = args.k.clone().map_or(dk, |r| r.0);
    let offsets = match (&args.n, &args.n_offset) {
        (Some(_), _) => None,
        (None, Some(o)) => Some(o.clone()),
        (None, None) => doff,
    };
    match offsets {
        Some(off) => ks
            .iter()
            .flat_map(|&k| off.iter().map(move |&o| (k + o, k)))
            .collect(),
        None => {
            let ns = args.n.clone().map_or(dn, |r| r.0);
            ns.iter().flat_map(|&n| ks.iter().map(move |&k| (n, k))).collect()
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let pairs = grid_pairs(&args);
    if args.csv.is_some() && args.suite != Suite::Theorem {
        return Err(usage("--csv applies to the theorem suite only"));
    }
    let report: VerificationReport = match args.suite {
        Suite::Factorizations => verify::verify_factorizations(&pairs),
        Suite::Identities => verify::verify_appendix_identities(&pairs),
        Suite::Signs => verify::verify_appendix_signs(&pairs),
        Suite::Ordering => verify::verify_ordering_lemma(&pairs),
        Suite::Dominance => verify::verify_theta2_dominates(&pairs),
        Suite::Bounds => verify::verify_bounds(&pairs, args.max_enumerated_k),
        Suite::Theorem => {
            let &[(n, k)] = pairs.as_slice() else {
                return Err(usage("the theorem suite takes a single n and k"));
            };
            if k < 5 || n < k {
                return Err(usage(format!("the theorem suite needs n ≥ k ≥ 5, got n = {n}, k = {k}")));
            }
            let run = verify::verify_theorem(n, k);
            if let Some(path) = &args.csv {
                report::write_csv(path, &run.ranking)?;
            }
            run.report
        }
    };
    emit(args.out.as_deref(), &report)?;
    let code = if report.passed() { EXIT_OK } else { EXIT_FAIL };
    eprintln!(
        "{}: {} points, {} failed",
        report.claim, report.totals.points, report.totals.fail
    );
    Ok(code)
}
