//! `qextremal` — command-line surface for the spectral/minor toolkit.
//!
//! Subcommands wrap the library operations one-to-one: `radius` (per-graph
//! spectral radius and Merris bound), `verify` (named verification suites),
//! `minor` (minor detection with witnesses), `certify` (sub-invariance
//! certificates), `lemma` (degree-profile hypotheses), `enumerate`
//! (canonical small-graph generation), and `extremal` (exhaustive
//! radius maximization over minor-free classes).
//!
//! Exit codes are a stable contract: 0 success/pass, 1 verification
//! failure, 2 usage or parse error, 3 capacity or timeout.

mod input;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use qextremal::canon::graph_from_key;
use qextremal::certificate::{certify_upper_bound, BoundCertificate, CertVerdict, CertificateError};
use qextremal::enumerate::enumerate_graph_keys;
use qextremal::graph6::write_graph6;
use qextremal::lemmas::{check_degree_lemma, DegreeHypothesis, LemmaError, LemmaId};
use qextremal::minor::{
    has_minor, is_edge_maximal, verify_witness, MinorError, MinorPattern, PatternParseError,
};
use qextremal::report::VerificationReport;
use qextremal::search::{extremal_search, SearchError};
use qextremal::spectral::{merris_bound, q_radius_tol, SpectralError, DEFAULT_TOL};
use qextremal::theorems::{default_scope, verify_theorem, TheoremError, TheoremId};

use input::{read_inputs, InputItem};
use output::{csv_table, emit, value_to_field, Format};

const EXIT_PASS: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_CAPACITY: i32 = 3;
// Usage/parse errors exit 2, matching clap's own convention.

/// Failures that abort a command, mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Capacity(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Capacity(_) => EXIT_CAPACITY,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Capacity(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "qextremal",
    version,
    about = "Signless-Laplacian spectral extremes of minor-free graph families",
    long_about = "Computes signless-Laplacian spectral radii, evaluates closed-form bounds, \
                  detects K_{s,t}/K_{1,t}/K_k minors with verifiable witnesses, certifies \
                  upper bounds, and runs named verification suites over the extremal \
                  families F_{s,t}(n).\n\nGraph inputs are files (or stdin) with one graph \
                  per line: a graph6 record, or a family spec \"F s t n\" denoting \
                  F_{s,t}(n) = K_{s-1} v (p K_t + K_r). Exit codes: 0 pass, 1 verification \
                  failure, 2 usage/parse error, 3 capacity/timeout."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-graph spectral radius q, Merris bound, and degree sequence.
    Radius(RadiusArgs),
    /// Run a named verification suite: T11, T12, T13, T21, L23, L24.
    Verify(VerifyArgs),
    /// Decide minor containment per graph, with self-validated witnesses.
    Minor(MinorArgs),
    /// Certify measured or supplied radius upper bounds per graph.
    Certify(CertifyArgs),
    /// Check a degree-profile hypothesis (L25-L28) and its q <= n+2 bound.
    Lemma(LemmaArgs),
    /// Emit canonical graph6 lines for every isomorphism class of order n.
    Enumerate(EnumerateArgs),
    /// Maximize q over all minor-free isomorphism classes of order n.
    Extremal(ExtremalArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Worker threads for per-graph work; output stays in input order.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct RadiusArgs {
    /// Graph files (graph6 lines or "F s t n" specs); stdin when omitted.
    files: Vec<PathBuf>,
    /// Eigensolve residual tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id (same as --theorem; give either).
    #[arg(value_name = "THEOREM")]
    theorem_pos: Option<String>,
    /// Suite id: T11, T12, T13, T21, L23, L24.
    #[arg(long)]
    theorem: Option<String>,
    /// Inclusive order range "A..B" (or a single order "N").
    #[arg(long, value_parser = parse_range)]
    n: Option<(usize, usize)>,
    /// Smaller pattern side, where the suite allows choosing it.
    #[arg(long)]
    s: Option<usize>,
    /// Larger pattern side, where the suite allows choosing it.
    #[arg(long)]
    t: Option<usize>,
    /// Approximate-comparison tolerance for the suite's checks.
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for any randomized evidence.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct MinorArgs {
    /// Pattern: complete "K4"/"K_4", bipartite "K2,3"/"K_{2,3}", star "K1,t".
    #[arg(long)]
    pattern: String,
    /// Graph files (graph6 lines or "F s t n" specs); stdin when omitted.
    files: Vec<PathBuf>,
    /// For minor-free graphs, also decide edge-maximality.
    #[arg(long)]
    maximal: bool,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct CertifyArgs {
    /// Graph files (graph6 lines or "F s t n" specs); stdin when omitted.
    files: Vec<PathBuf>,
    /// Bound to certify; defaults to each graph's measured radius.
    #[arg(long)]
    r: Option<f64>,
    /// Slack allowed in the coordinatewise certificate comparison.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct LemmaArgs {
    /// Degree-profile lemma id: L25, L26, L27, L28.
    lemma: String,
    /// Mid-band size k (L25 allows 1..=12, L27 allows 1..=13; L26/L28 fix 0).
    #[arg(long)]
    k: Option<usize>,
    /// Graph files (graph6 lines or "F s t n" specs); stdin when omitted.
    files: Vec<PathBuf>,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Graph order (enumeration capacity permitting).
    #[arg(long)]
    n: usize,
    /// Keep only graphs with no minor of this pattern.
    #[arg(long)]
    pattern: Option<String>,
    /// Keep only connected graphs.
    #[arg(long)]
    connected: bool,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Graph order (enumeration capacity permitting).
    #[arg(long)]
    n: usize,
    /// Forbidden minor pattern.
    #[arg(long)]
    pattern: String,
    #[command(flatten)]
    io: IoArgs,
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.code());
        }
    }
}

fn run(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Radius(a) => cmd_radius(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Minor(a) => cmd_minor(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Lemma(a) => cmd_lemma(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Extremal(a) => cmd_extremal(a),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

/// Inclusive "A..B" / "A..=B" range, or a single order "N".
fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo: usize = lo
            .trim()
            .parse()
            .map_err(|e| format!("bad range start {lo:?}: {e}"))?;
        let hi: usize = hi
            .trim()
            .parse()
            .map_err(|e| format!("bad range end {hi:?}: {e}"))?;
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok((lo, hi))
    } else {
        let n: usize = s.parse().map_err(|e| format!("bad order {s:?}: {e}"))?;
        Ok((n, n))
    }
}

/// Runs `f` on a dedicated pool of `workers` threads.
fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    if workers == 0 {
        return Err(CliError::Usage("--workers must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Capacity(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn prefixed(item: Option<&InputItem>, e: &dyn std::fmt::Display) -> String {
    match item {
        Some(it) => format!("{}:{}: {e}", it.source, it.line),
        None => e.to_string(),
    }
}

fn spectral_err(item: Option<&InputItem>, e: SpectralError) -> CliError {
    let msg = prefixed(item, &e);
    match e {
        SpectralError::NotConverged { .. } => CliError::Capacity(msg),
        _ => CliError::Usage(msg),
    }
}

fn minor_err(item: Option<&InputItem>, e: MinorError) -> CliError {
    let msg = prefixed(item, &e);
    match e {
        MinorError::Timeout { .. } | MinorError::HostTooLarge { .. } => CliError::Capacity(msg),
        _ => CliError::Usage(msg),
    }
}

fn cert_err(item: Option<&InputItem>, e: CertificateError) -> CliError {
    CliError::Usage(prefixed(item, &e))
}

fn lemma_err(item: Option<&InputItem>, e: LemmaError) -> CliError {
    let msg = prefixed(item, &e);
    match e {
        LemmaError::Spectral(SpectralError::NotConverged { .. }) => CliError::Capacity(msg),
        _ => CliError::Usage(msg),
    }
}

fn search_err(e: SearchError) -> CliError {
    match &e {
        SearchError::Enumerate(_) => CliError::Capacity(e.to_string()),
        SearchError::Spectral(SpectralError::NotConverged { .. }) => {
            CliError::Capacity(e.to_string())
        }
        SearchError::Minor(MinorError::Timeout { .. } | MinorError::HostTooLarge { .. }) => {
            CliError::Capacity(e.to_string())
        }
        _ => CliError::Usage(e.to_string()),
    }
}

fn theorem_err(e: TheoremError) -> CliError {
    match e {
        TheoremError::UnknownId(_) | TheoremError::BadScope(_) | TheoremError::Graph(_) => {
            CliError::Usage(e.to_string())
        }
        TheoremError::Enumerate(_) => CliError::Capacity(e.to_string()),
        TheoremError::Minor(m) => minor_err(None, m),
        TheoremError::Spectral(s) => spectral_err(None, s),
        TheoremError::Search(s) => search_err(s),
    }
}

fn pattern_err(e: PatternParseError) -> CliError {
    CliError::Usage(e.to_string())
}

/// Renders per-graph result rows in the selected format.
fn render_items(
    io: &IoArgs,
    command: &str,
    rows: &[serde_json::Value],
    columns: &[&str],
) -> Result<(), CliError> {
    match io.format {
        Format::Json => {
            let doc = json!({ "command": command, "count": rows.len(), "items": rows });
            emit(&io.out, &serde_json::to_string_pretty(&doc).expect("serializable report"))
        }
        Format::Csv => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| columns.iter().map(|c| value_to_field(&r[*c])).collect())
                .collect();
            emit(&io.out, &csv_table(columns, &table))
        }
        Format::Plain => {
            let mut text = String::new();
            for r in rows {
                let parts: Vec<String> = columns
                    .iter()
                    .filter(|c| !r[**c].is_null())
                    .map(|c| format!("{c}={}", value_to_field(&r[*c])))
                    .collect();
                text.push_str(&parts.join(" "));
                text.push('\n');
            }
            if rows.is_empty() {
                text.push_str(&format!("{command}: no input graphs\n"));
            }
            emit(&io.out, &text)
        }
    }
}

// ---------------------------------------------------------------------------
// radius
// ---------------------------------------------------------------------------

fn cmd_radius(a: RadiusArgs) -> Result<i32, CliError> {
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(CliError::Usage(format!(
            "--tol must be positive, got {}",
            a.tol
        )));
    }
    let items = read_inputs(&a.files)?;
    let rows = with_pool(a.io.workers, || {
        items
            .par_iter()
            .enumerate()
            .map(|(i, it)| {
                let sr = q_radius_tol(&it.graph, a.tol).map_err(|e| spectral_err(Some(it), e))?;
                let mut degrees: Vec<usize> =
                    (0..it.graph.order()).map(|v| it.graph.degree(v)).collect();
                degrees.sort_unstable_by(|x, y| y.cmp(x));
                Ok(json!({
                    "index": i,
                    "input": it.label,
                    "n": it.graph.order(),
                    "m": it.graph.size(),
                    "q": sr.q,
                    "merris": merris_bound(&it.graph),
                    "residual": sr.residual,
                    "iterations": sr.iterations,
                    "degrees": degrees,
                }))
            })
            .collect::<Result<Vec<_>, CliError>>()
    })??;
    render_items(
        &a.io,
        "radius",
        &rows,
        &["index", "input", "n", "m", "q", "merris", "residual", "iterations", "degrees"],
    )?;
    Ok(EXIT_PASS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(a: VerifyArgs) -> Result<i32, CliError> {
    let id_str = match (&a.theorem_pos, &a.theorem) {
        (Some(p), Some(f)) if p.eq_ignore_ascii_case(f) => p.clone(),
        (Some(p), Some(f)) => {
            return Err(CliError::Usage(format!(
                "conflicting theorem ids: positional {p:?} vs --theorem {f:?}"
            )))
        }
        (Some(p), None) => p.clone(),
        (None, Some(f)) => f.clone(),
        (None, None) => {
            return Err(CliError::Usage(
                "missing theorem id (one of T11, T12, T13, T21, L23, L24)".into(),
            ))
        }
    };
    let id: TheoremId = id_str
        .parse()
        .map_err(|e: TheoremError| CliError::Usage(e.to_string()))?;
    let mut scope = default_scope(id);
    if let Some((lo, hi)) = a.n {
        scope.n_lo = lo;
        scope.n_hi = hi;
    }
    if a.s.is_some() {
        scope.s = a.s;
    }
    if a.t.is_some() {
        scope.t = a.t;
    }
    if let Some(tol) = a.tol {
        scope.tol = tol;
    }
    if let Some(seed) = a.seed {
        scope.seed = seed;
    }
    let report = with_pool(a.io.workers, || verify_theorem(id, &scope))?.map_err(theorem_err)?;
    render_report(&a.io, &report)?;
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn render_report(io: &IoArgs, report: &VerificationReport) -> Result<(), CliError> {
    match io.format {
        Format::Json => emit(&io.out, &report.to_json_pretty()),
        Format::Csv => emit(&io.out, &report.to_csv()),
        Format::Plain => {
            let mut text = format!(
                "suite {} mode {} params {}\n",
                report.theorem, report.mode, report.params
            );
            for w in &report.warnings {
                text.push_str(&format!("warning: {w}\n"));
            }
            for c in &report.checks {
                text.push_str(&format!(
                    "{} {}  {} {} {}\n",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.lhs,
                    c.relation,
                    c.rhs
                ));
            }
            for w in &report.witnesses {
                text.push_str(&format!("witness: {w}\n"));
            }
            let failed = report.checks.iter().filter(|c| !c.pass).count();
            text.push_str(&format!(
                "result: {} ({} checks, {} failed)\n",
                if failed == 0 { "PASS" } else { "FAIL" },
                report.checks.len(),
                failed
            ));
            emit(&io.out, &text)
        }
    }
}

// ---------------------------------------------------------------------------
// minor
// ---------------------------------------------------------------------------

fn cmd_minor(a: MinorArgs) -> Result<i32, CliError> {
    let pattern: MinorPattern = a.pattern.parse().map_err(pattern_err)?;
    let items = read_inputs(&a.files)?;
    let rows = with_pool(a.io.workers, || {
        items
            .par_iter()
            .enumerate()
            .map(|(i, it)| {
                let mut row = json!({
                    "index": i,
                    "input": it.label,
                    "pattern": pattern,
                    "n": it.graph.order(),
                    "m": it.graph.size(),
                });
                match has_minor(&it.graph, &pattern) {
                    Ok(Some(w)) => {
                        let valid = verify_witness(&it.graph, &w)
                            .map_err(|e| CliError::Usage(prefixed(Some(it), &e)))?;
                        row["verdict"] = json!("minor-found");
                        row["witness"] = json!(w.branch_sets);
                        row["witness_valid"] = json!(valid);
                    }
                    Ok(None) => {
                        row["verdict"] = json!("minor-free");
                        if a.maximal {
                            match is_edge_maximal(&it.graph, &pattern) {
                                Ok(b) => row["maximal"] = json!(b),
                                Err(MinorError::Timeout { .. }) => {
                                    row["maximal"] = json!("timeout");
                                }
                                Err(e) => return Err(minor_err(Some(it), e)),
                            }
                        }
                    }
                    Err(MinorError::Timeout { nodes }) => {
                        row["verdict"] = json!("timeout");
                        row["nodes"] = json!(nodes);
                    }
                    Err(e) => return Err(minor_err(Some(it), e)),
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>, CliError>>()
    })??;
    let any_timeout = rows
        .iter()
        .any(|r| r["verdict"] == "timeout" || r["maximal"] == "timeout");
    render_items(
        &a.io,
        "minor",
        &rows,
        &["index", "input", "pattern", "n", "m", "verdict", "witness", "witness_valid", "maximal"],
    )?;
    Ok(if any_timeout { EXIT_CAPACITY } else { EXIT_PASS })
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

fn cmd_certify(a: CertifyArgs) -> Result<i32, CliError> {
    if a.tol < 0.0 {
        return Err(CliError::Usage(format!(
            "--tol must be nonnegative, got {}",
            a.tol
        )));
    }
    let items = read_inputs(&a.files)?;
    let rows = with_pool(a.io.workers, || {
        items
            .par_iter()
            .enumerate()
            .map(|(i, it)| {
                let sr = q_radius_tol(&it.graph, DEFAULT_TOL)
                    .map_err(|e| spectral_err(Some(it), e))?;
                let r = a.r.unwrap_or(sr.q);
                let cert = BoundCertificate::from_floats(sr.perron.clone(), r);
                let rep = certify_upper_bound(&it.graph, &cert, a.tol)
                    .map_err(|e| cert_err(Some(it), e))?;
                let mut row = json!({
                    "index": i,
                    "input": it.label,
                    "n": it.graph.order(),
                    "q": sr.q,
                    "r": r,
                    "covers_all_components": rep.covers_all_components,
                });
                match rep.verdict {
                    CertVerdict::Accept => row["verdict"] = json!("accept"),
                    CertVerdict::Reject { vertex, lhs, rhs } => {
                        row["verdict"] = json!("reject");
                        row["violation"] =
                            json!({ "vertex": vertex, "lhs": lhs, "rhs": rhs });
                    }
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>, CliError>>()
    })??;
    let any_reject = rows.iter().any(|r| r["verdict"] == "reject");
    render_items(
        &a.io,
        "certify",
        &rows,
        &["index", "input", "n", "q", "r", "verdict", "covers_all_components"],
    )?;
    Ok(if any_reject { EXIT_FAIL } else { EXIT_PASS })
}

// ---------------------------------------------------------------------------
// lemma
// ---------------------------------------------------------------------------

fn parse_lemma_id(s: &str) -> Result<LemmaId, CliError> {
    match s.trim().to_ascii_uppercase().as_str() {
        "L25" => Ok(LemmaId::L25),
        "L26" => Ok(LemmaId::L26),
        "L27" => Ok(LemmaId::L27),
        "L28" => Ok(LemmaId::L28),
        other => Err(CliError::Usage(format!(
            "unknown lemma id {other:?} (expected L25, L26, L27, L28)"
        ))),
    }
}

fn cmd_lemma(a: LemmaArgs) -> Result<i32, CliError> {
    let id = parse_lemma_id(&a.lemma)?;
    let k = a.k.unwrap_or(match id {
        LemmaId::L25 | LemmaId::L27 => 1,
        LemmaId::L26 | LemmaId::L28 => 0,
    });
    let hyp = DegreeHypothesis::new(id, k).map_err(|e| CliError::Usage(e.to_string()))?;
    let items = read_inputs(&a.files)?;
    let rows = with_pool(a.io.workers, || {
        items
            .par_iter()
            .enumerate()
            .map(|(i, it)| {
                let check =
                    check_degree_lemma(&it.graph, &hyp).map_err(|e| lemma_err(Some(it), e))?;
                Ok(json!({
                    "index": i,
                    "input": it.label,
                    "lemma": id.to_string(),
                    "k": k,
                    "n": check.n,
                    "hypothesis_met": check.hypothesis_met,
                    "bound_holds": check.bound_holds,
                    "q": check.q,
                }))
            })
            .collect::<Result<Vec<_>, CliError>>()
    })??;
    let any_violation = rows.iter().any(|r| r["bound_holds"] == false);
    render_items(
        &a.io,
        "lemma",
        &rows,
        &["index", "input", "lemma", "k", "n", "hypothesis_met", "bound_holds", "q"],
    )?;
    Ok(if any_violation { EXIT_FAIL } else { EXIT_PASS })
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

fn cmd_enumerate(a: EnumerateArgs) -> Result<i32, CliError> {
    let pattern: Option<MinorPattern> = a
        .pattern
        .as_deref()
        .map(|p| p.parse().map_err(pattern_err))
        .transpose()?;
    let keys = enumerate_graph_keys(a.n).map_err(|e| CliError::Capacity(e.to_string()))?;
    let lines: Vec<String> = with_pool(a.io.workers, || {
        keys.par_iter()
            .map(|&key| {
                let g = graph_from_key(key);
                if a.connected && g.components().len() != 1 {
                    return Ok(None);
                }
                if let Some(p) = &pattern {
                    if has_minor(&g, p).map_err(|e| minor_err(None, e))?.is_some() {
                        return Ok(None);
                    }
                }
                Ok(Some(write_graph6(&g)))
            })
            .collect::<Result<Vec<Option<String>>, CliError>>()
    })??
    .into_iter()
    .flatten()
    .collect();
    match a.io.format {
        Format::Plain => emit(&a.io.out, &lines.join("\n")),
        Format::Json => {
            let doc = json!({
                "command": "enumerate",
                "n": a.n,
                "pattern": pattern,
                "connected": a.connected,
                "count": lines.len(),
                "items": lines,
            });
            emit(&a.io.out, &serde_json::to_string_pretty(&doc).expect("serializable report"))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = lines
                .iter()
                .enumerate()
                .map(|(i, g6)| vec![i.to_string(), g6.clone()])
                .collect();
            emit(&a.io.out, &csv_table(&["index", "graph6"], &rows))
        }
    }?;
    Ok(EXIT_PASS)
}

// ---------------------------------------------------------------------------
// extremal
// ---------------------------------------------------------------------------

fn cmd_extremal(a: ExtremalArgs) -> Result<i32, CliError> {
    let pattern: MinorPattern = a.pattern.parse().map_err(pattern_err)?;
    let result = with_pool(a.io.workers, || extremal_search(a.n, &pattern))?.map_err(search_err)?;
    match a.io.format {
        Format::Json => emit(
            &a.io.out,
            &serde_json::to_string_pretty(&result).expect("serializable report"),
        ),
        Format::Csv => {
            let row = vec![
                result.n.to_string(),
                result.pattern.to_string(),
                format!("{}", result.max_q),
                result.matches_family.to_string(),
                result.argmax.join(" "),
            ];
            emit(
                &a.io.out,
                &csv_table(&["n", "pattern", "max_q", "matches_family", "argmax"], &[row]),
            )
        }
        Format::Plain => {
            let mut text = format!(
                "n={} pattern={} max_q={} matches_family={}\n",
                result.n, result.pattern, result.max_q, result.matches_family
            );
            for g6 in &result.argmax {
                text.push_str(&format!("argmax: {g6}\n"));
            }
            emit(&a.io.out, &text)
        }
    }?;
    Ok(EXIT_PASS)
}
