//! The `gclab` command-line front end.
//!
//! One subcommand per engine entry point (`dim`, `hilbert`, `decompose`,
//! `socle`, `tnt`, `t2`, `present`) plus `verify`, which runs the whole
//! battery of pinned checks up to a chosen rank. Reports go to standard
//! output (or `--out`) as JSON, CSV, or plain text; progress heartbeats for
//! long runs go to standard error only, so piped output stays machine-clean.
//!
//! Exit codes: `0` success, `1` a checked value came out wrong, `2` a
//! hypothesis-failure outcome (quotient with socle below the minimal
//! degree), `3` an internal assertion tripped (a bug, not bad input), `64`
//! malformed command line or input files.
//!
//! Determinism contract: identical configuration and build produce
//! byte-identical reports. JSON keys are emitted in sorted order, rationals
//! render canonically, and no timing or host information enters a report.
//! Parallelism (`--jobs`, honored by the worker pool the sweeps run on)
//! never changes a report's bytes, only how fast they arrive. When
//! `GCLAB_CACHE_DIR` is set, component bases are cached there between runs.

use std::collections::BTreeMap;
use std::io::Write;
use std::panic::AssertUnwindSafe;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combinatorics::{d_of_n, partition_of_multidegree, structure_dim, Multidegree};
use crate::gc_general::{export_ideal, export_ideal_json, gc_ideal, AlgebraPresentation};
use crate::gc_ring::{all_valid_multidegrees, valid_multidegrees, GcRing};
use crate::rep_theory::decompose;
use crate::tangents::{
    selection_vectors, t2_witness, tnt_analyze, tnt_check_with_options,
    quotient_workflow_with_options, FreePresentedRing, GcQuotient, IdealPresentation,
    QuotientReport, QuotientSelection, TangentOptions, TangentTarget,
};
use crate::{Error, Result};

const SCHEMA: &str = "gclab/1";

// ---------------------------------------------------------------------------
// Command-line grammar
// ---------------------------------------------------------------------------

#[derive(Parser, Debug)]
#[command(
    name = "gclab",
    version,
    about = "Exact computations for Galois closures of square-zero algebras",
    subcommand_required = true,
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for the parallel sweeps (default: one per core).
    #[arg(long, global = true, value_name = "W")]
    jobs: Option<usize>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// The rank argument, accepted positionally (`gclab dim 4`) or as a flag
/// (`gclab dim --n 4`).
#[derive(Args, Debug, Clone, Copy)]
#[group(required = true, multiple = false)]
struct RankArg {
    /// Rank of the square-zero algebra.
    #[arg(value_name = "N")]
    n_positional: Option<usize>,
    /// Rank of the square-zero algebra (flag form).
    #[arg(long, value_name = "N")]
    n: Option<usize>,
}

impl RankArg {
    fn get(&self) -> usize {
        self.n_positional.or(self.n).expect("the argument group requires one form")
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Total dimension of the closure ring, with the closed-form cross-check.
    Dim {
        #[command(flatten)]
        rank: RankArg,
    },
    /// Hilbert function of the ring, or of a socle quotient when a quotient
    /// is selected with --r or --select-multidegrees.
    Hilbert {
        #[command(flatten)]
        rank: RankArg,
        /// Quotient by the first R socle generators of the built-in family.
        #[arg(long, value_name = "R", conflicts_with = "select_multidegrees")]
        r: Option<usize>,
        /// Quotient by all minimal-degree socle vectors of these
        /// multidegrees, e.g. "1,1,0;1,0,1".
        #[arg(long, value_name = "D;D;...")]
        select_multidegrees: Option<String>,
    },
    /// Decompose one graded component into irreducible symmetric-group
    /// representations and cross-check the dimension.
    Decompose {
        #[command(flatten)]
        rank: RankArg,
        /// The multidegree of the component, e.g. "1,1,0".
        #[arg(long, value_name = "D", required = true)]
        d: String,
    },
    /// Socle dimensions by total degree, with an optional per-multidegree
    /// breakdown at one degree.
    Socle {
        #[command(flatten)]
        rank: RankArg,
        /// Break down the socle of this total degree by multidegree.
        #[arg(long, value_name = "T")]
        degree: Option<usize>,
    },
    /// Negative-tangent verdict for the ring, or for a socle quotient when
    /// one is selected.
    Tnt {
        #[command(flatten)]
        rank: RankArg,
        /// Quotient by the first R socle generators of the built-in family.
        #[arg(
            long,
            value_name = "R",
            conflicts_with_all = ["select_multidegrees", "full_minimal_socle"]
        )]
        r: Option<usize>,
        /// Quotient by all minimal-degree socle vectors of these
        /// multidegrees, e.g. "1,1,0;1,0,1".
        #[arg(long, value_name = "D;D;...", conflicts_with = "full_minimal_socle")]
        select_multidegrees: Option<String>,
        /// Quotient by every socle element of the minimal socle degree.
        #[arg(long)]
        full_minimal_socle: bool,
        /// Truncation-soundness probe: admit constraints from this many
        /// extra degrees beyond the vanishing bound (must change nothing).
        #[arg(long, value_name = "K", default_value_t = 0)]
        extra_degree: usize,
    },
    /// Check the explicit obstruction witness.
    T2 {
        #[command(flatten)]
        rank: RankArg,
    },
    /// Present the closure ideal of an algebra given by structure constants
    /// in a JSON file ({"labels": [...], "constants": [[[...]]]}).
    Present {
        /// Path to the algebra description.
        #[arg(value_name = "FILE")]
        file: PathBuf,
        /// Also report graded dimensions up to this total degree (only for
        /// multigraded inputs).
        #[arg(long, value_name = "T")]
        graded_dims: Option<usize>,
    },
    /// Run the verification battery up to a maximum rank (4 to 7).
    Verify {
        /// Largest rank to verify.
        #[arg(value_name = "N_MAX", default_value_t = 5)]
        n_max: usize,
        /// Truncation-soundness probe passed through to the tangent sweeps.
        #[arg(long, value_name = "K", default_value_t = 0)]
        extra_degree: usize,
    },
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Parses the command line, runs the command, and returns the process exit
/// code. Panics inside the engine are caught and mapped to exit code 3.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                0
            } else {
                64
            };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("gclab: --jobs must be at least 1");
            return 64;
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("gclab: cannot size the worker pool: {e}");
            return 64;
        }
    }
    match std::panic::catch_unwind(AssertUnwindSafe(|| dispatch(&cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(err)) => {
            eprintln!("gclab: {err}");
            64
        }
        Err(_) => {
            eprintln!("gclab: internal assertion failure; please report this as a bug");
            3
        }
    }
}

/// What a command hands back for emission: a structured report, or (for
/// `present --format text`) preformatted text.
enum Output {
    Report(Value),
    Raw(String),
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let (output, code) = match &cli.command {
        Command::Dim { rank } => cmd_dim(rank.get())?,
        Command::Hilbert { rank, r, select_multidegrees } => {
            cmd_hilbert(rank.get(), *r, select_multidegrees.as_deref())?
        }
        Command::Decompose { rank, d } => cmd_decompose(rank.get(), d)?,
        Command::Socle { rank, degree } => cmd_socle(rank.get(), *degree)?,
        Command::Tnt { rank, r, select_multidegrees, full_minimal_socle, extra_degree } => {
            cmd_tnt(
                rank.get(),
                *r,
                select_multidegrees.as_deref(),
                *full_minimal_socle,
                *extra_degree,
            )?
        }
        Command::T2 { rank } => cmd_t2(rank.get())?,
        Command::Present { file, graded_dims } => cmd_present(file, *graded_dims, cli.format)?,
        Command::Verify { n_max, extra_degree } => cmd_verify(*n_max, *extra_degree, cli.format)?,
    };
    let rendered = match (&output, cli.format) {
        (Output::Raw(text), _) => text.clone(),
        (Output::Report(v), Format::Json) => {
            let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
            s.push('\n');
            s
        }
        (Output::Report(v), Format::Csv) => to_csv(v),
        (Output::Report(v), Format::Text) => to_text(v),
    };
    write_out(&rendered, cli.out.as_deref())?;
    Ok(code)
}

fn write_out(rendered: &str, out: Option<&Path>) -> Result<()> {
    let io_err = |e: std::io::Error| Error::Unsupported {
        detail: format!("cannot write the report: {e}"),
    };
    match out {
        Some(path) => std::fs::write(path, rendered).map_err(io_err),
        None => std::io::stdout().write_all(rendered.as_bytes()).map_err(io_err),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

/// Builds the ring, routing component bases through `GCLAB_CACHE_DIR` when
/// that variable is set and nonempty.
fn make_ring(n: usize) -> Arc<GcRing> {
    match std::env::var_os("GCLAB_CACHE_DIR") {
        Some(dir) if !dir.is_empty() => Arc::new(GcRing::with_cache_dir(n, PathBuf::from(dir))),
        _ => Arc::new(GcRing::new(n)),
    }
}

fn ensure_rank(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::Unsupported { detail: format!("this command needs n >= {min}, got {n}") });
    }
    Ok(())
}

fn parse_multidegree(s: &str, n: usize) -> Result<Multidegree> {
    let entries: std::result::Result<Vec<i64>, _> =
        s.split(',').map(|p| p.trim().parse::<i64>()).collect();
    let entries = entries.map_err(|_| Error::InvalidMultidegree {
        detail: format!("cannot parse {s:?}; expected comma-separated integers"),
    })?;
    if entries.len() != n - 1 {
        return Err(Error::InvalidMultidegree {
            detail: format!("{s:?} has {} entries; rank {n} needs {}", entries.len(), n - 1),
        });
    }
    Ok(Multidegree::new(entries))
}

fn parse_multidegree_list(s: &str, n: usize) -> Result<Vec<Multidegree>> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(|p| parse_multidegree(p, n)).collect()
}

/// Adds the schema version and command name to a report.
fn with_envelope(command: &str, v: Value) -> Value {
    let mut map = match v {
        Value::Object(m) => m,
        other => {
            let mut m = serde_json::Map::new();
            m.insert("report".to_string(), other);
            m
        }
    };
    map.insert("schema".to_string(), json!(SCHEMA));
    map.insert("command".to_string(), json!(command));
    Value::Object(map)
}

/// Flat CSV projection of a report: one `path,value` row per scalar, paths
/// in sorted JSON order.
fn to_csv(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
        let join = |key: &str| {
            if prefix.is_empty() { key.to_string() } else { format!("{prefix}.{key}") }
        };
        match v {
            Value::Object(m) => {
                for (k, inner) in m {
                    walk(&join(k), inner, rows);
                }
            }
            Value::Array(a) => {
                for (i, inner) in a.iter().enumerate() {
                    walk(&join(&i.to_string()), inner, rows);
                }
            }
            Value::Null => rows.push((prefix.to_string(), String::new())),
            Value::Bool(b) => rows.push((prefix.to_string(), b.to_string())),
            Value::Number(x) => rows.push((prefix.to_string(), x.to_string())),
            Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        }
    }
    fn escape(s: &str) -> String {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    }
    let mut rows = Vec::new();
    walk("", v, &mut rows);
    let mut out = String::from("key,value\n");
    for (k, val) in rows {
        out.push_str(&format!("{},{}\n", escape(&k), escape(&val)));
    }
    out
}

/// Human-readable rendering: `key: value` lines, nesting by indentation,
/// scalar arrays inline.
fn to_text(v: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Null => Some("-".to_string()),
            Value::Bool(b) => Some(b.to_string()),
            Value::Number(x) => Some(x.to_string()),
            Value::String(s) => Some(s.clone()),
            _ => None,
        }
    }
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, inner) in m {
                    if let Some(s) = scalar(inner) {
                        out.push_str(&format!("{pad}{k}: {s}\n"));
                    } else if let Value::Array(a) = inner {
                        if let Some(inline) = inline_array(a) {
                            out.push_str(&format!("{pad}{k}: {inline}\n"));
                        } else {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(inner, indent + 1, out);
                        }
                    } else {
                        out.push_str(&format!("{pad}{k}:\n"));
                        walk(inner, indent + 1, out);
                    }
                }
            }
            Value::Array(a) => {
                for inner in a {
                    if let Some(s) = scalar(inner) {
                        out.push_str(&format!("{pad}- {s}\n"));
                    } else {
                        out.push_str(&format!("{pad}-\n"));
                        walk(inner, indent + 1, out);
                    }
                }
            }
            other => {
                if let Some(s) = scalar(other) {
                    out.push_str(&format!("{pad}{s}\n"));
                }
            }
        }
    }
    fn inline_array(a: &[Value]) -> Option<String> {
        let parts: Option<Vec<String>> = a.iter().map(scalar).collect();
        parts.map(|p| format!("[{}]", p.join(", ")))
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn cmd_dim(n: usize) -> Result<(Output, i32)> {
    ensure_rank(n, 2)?;
    let ring = make_ring(n);
    let by_total = ring.hilbert_function();
    let d = ring.total_dimension();
    let formula = d_of_n(n);
    let matches = d == formula;
    let report = with_envelope(
        "dim",
        json!({
            "n": n,
            "d": d,
            "closed_form": formula,
            "matches": matches,
            "by_total": by_total,
        }),
    );
    Ok((Output::Report(report), if matches { 0 } else { 1 }))
}

fn cmd_hilbert(n: usize, r: Option<usize>, select: Option<&str>) -> Result<(Output, i32)> {
    ensure_rank(n, 2)?;
    let ring = make_ring(n);
    if r.is_none() && select.is_none() {
        let report = with_envelope(
            "hilbert",
            json!({ "n": n, "hilbert": ring.hilbert_function() }),
        );
        return Ok((Output::Report(report), 0));
    }
    let selection = match (r, select) {
        (Some(r), None) => QuotientSelection::Count(r),
        (None, Some(list)) => QuotientSelection::Multidegrees(parse_multidegree_list(list, n)?),
        _ => unreachable!("clap rejects combined selections"),
    };
    let (description, _, vectors) = selection_vectors(&ring, &selection)?;
    let r_used = vectors.len();
    let quotient = GcQuotient::new(Arc::clone(&ring), vectors);
    let hilbert = quotient.hilbert_function();
    let expected = match crate::combinatorics::big_r(n) {
        Ok(cap) if (r_used as u64) <= cap => crate::combinatorics::hilbert_formula(n, r_used as u64).ok(),
        _ => None,
    };
    let matches =
        expected.as_ref().map(|e| e.iter().map(|&v| v.max(0) as u64).collect::<Vec<u64>>() == hilbert);
    let report = with_envelope(
        "hilbert",
        json!({
            "n": n,
            "selection": description,
            "r": r_used,
            "hilbert": hilbert,
            "closed_form": expected,
            "matches": matches,
        }),
    );
    Ok((Output::Report(report), if matches == Some(false) { 1 } else { 0 }))
}

fn cmd_decompose(n: usize, d: &str) -> Result<(Output, i32)> {
    ensure_rank(n, 2)?;
    let d = parse_multidegree(d, n)?;
    let ring = make_ring(n);
    let dec = decompose(&ring, &d)?;
    let linear = ring.dim(&d) as u64;
    let report = with_envelope(
        "decompose",
        json!({
            "n": n,
            "decomposition": dec.to_json(),
            "linear_dim": linear,
            "matches": dec.total_dim() == linear,
        }),
    );
    Ok((Output::Report(report), 0))
}

fn cmd_socle(n: usize, degree: Option<usize>) -> Result<(Output, i32)> {
    ensure_rank(n, 2)?;
    let ring = make_ring(n);
    let by_total: Vec<Value> = (1..n)
        .map(|t| json!({ "total": t, "dim": ring.socle_dim_in_degree(t) }))
        .collect();
    let breakdown = match degree {
        None => Value::Null,
        Some(t) => {
            if t == 0 || t >= n {
                return Err(Error::Unsupported {
                    detail: format!("socle breakdown needs a total degree in 1..={}", n - 1),
                });
            }
            Value::Array(
                valid_multidegrees(n, t)
                    .iter()
                    .filter_map(|d| {
                        let s = ring.socle_component(d);
                        (s.dim() > 0)
                            .then(|| json!({ "multidegree": d.entries(), "dim": s.dim() }))
                    })
                    .collect(),
            )
        }
    };
    let report = with_envelope(
        "socle",
        json!({
            "n": n,
            "min_socle_degree": ring.min_socle_degree(),
            "lower_bound": n.div_ceil(2),
            "by_total": by_total,
            "at_degree": breakdown,
        }),
    );
    Ok((Output::Report(report), 0))
}

fn cmd_tnt(
    n: usize,
    r: Option<usize>,
    select: Option<&str>,
    full_minimal_socle: bool,
    extra_degree: usize,
) -> Result<(Output, i32)> {
    ensure_rank(n, 2)?;
    let ring = make_ring(n);
    let opts = TangentOptions { early_exit: true, extra_degree, progress: n >= 6 };
    let selection = match (r, select, full_minimal_socle) {
        (None, None, false) => None,
        (Some(r), None, false) => Some(QuotientSelection::Count(r)),
        (None, Some(list), false) => {
            Some(QuotientSelection::Multidegrees(parse_multidegree_list(list, n)?))
        }
        (None, None, true) => Some(QuotientSelection::FullMinimalSocle),
        _ => unreachable!("clap rejects combined selections"),
    };
    match selection {
        None => {
            let report = tnt_check_with_options(&ring, &[], &opts)?;
            let code = if report.tnt { 0 } else { 1 };
            Ok((Output::Report(with_envelope("tnt", report.to_json())), code))
        }
        Some(selection) => {
            let report = quotient_workflow_with_options(&ring, &selection, &opts)?;
            let code = quotient_exit_code(&report);
            Ok((Output::Report(with_envelope("tnt", report.to_json())), code))
        }
    }
}

/// `2` for the hypothesis-failure outcome, `1` for a failed verdict, `0`
/// for a clean pass.
fn quotient_exit_code(report: &QuotientReport) -> i32 {
    if report.low_socle.is_some() {
        2
    } else if report.tangent.as_ref().is_some_and(|t| t.tnt)
        && report.hilbert_matches != Some(false)
    {
        0
    } else {
        1
    }
}

fn cmd_t2(n: usize) -> Result<(Output, i32)> {
    ensure_rank(n, 2)?;
    let ring = make_ring(n);
    let report = t2_witness(&ring)?;
    let code = if report.applicable && !report.confirmed { 1 } else { 0 };
    Ok((Output::Report(with_envelope("t2", report.to_json())), code))
}

fn cmd_present(file: &Path, graded_dims: Option<usize>, format: Format) -> Result<(Output, i32)> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Unsupported {
        detail: format!("cannot read {}: {e}", file.display()),
    })?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Unsupported {
        detail: format!("{} is not valid JSON: {e}", file.display()),
    })?;
    let alg = AlgebraPresentation::from_json(&value)?;
    let ideal = gc_ideal(&alg)?;
    if format == Format::Text && graded_dims.is_none() {
        return Ok((Output::Raw(export_ideal(&ideal)), 0));
    }
    let dims = match graded_dims {
        None => Value::Null,
        Some(t) => json!(crate::gc_general::graded_dimensions(&alg, t)?),
    };
    let mut report = export_ideal_json(&ideal);
    if let Value::Object(map) = &mut report {
        map.insert("labels".to_string(), json!(alg.labels()));
        map.insert("graded_dims".to_string(), dims);
    }
    Ok((Output::Report(with_envelope("present", report)), 0))
}

// ---------------------------------------------------------------------------
// The verification battery
// ---------------------------------------------------------------------------

struct Check {
    name: String,
    computed: String,
    expected: String,
    pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, computed: impl Into<String>, expected: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), computed: computed.into(), expected: expected.into(), pass }
    }
}

/// The Hilbert functions the battery pins for the small ranks.
fn pinned_hilbert(n: usize) -> Option<Vec<u64>> {
    match n {
        4 => Some(vec![1, 9, 21, 1]),
        5 => Some(vec![1, 16, 86, 116, 1]),
        6 => Some(vec![1, 25, 235, 915, 680, 1]),
        _ => None,
    }
}

fn cmd_verify(n_max: usize, extra_degree: usize, format: Format) -> Result<(Output, i32)> {
    if !(4..=7).contains(&n_max) {
        return Err(Error::Unsupported {
            detail: format!("verify covers n_max in 4..=7, got {n_max}"),
        });
    }
    let mut rings: BTreeMap<usize, Arc<GcRing>> = BTreeMap::new();
    let mut checks: Vec<Check> = Vec::new();
    let top = n_max.min(6);

    macro_rules! push {
        ($check:expr) => {{
            let c = $check;
            eprintln!("verify: {} ... {}", c.name, if c.pass { "pass" } else { "FAIL" });
            checks.push(c);
        }};
    }
    fn ring_for(rings: &mut BTreeMap<usize, Arc<GcRing>>, n: usize) -> Arc<GcRing> {
        rings.entry(n).or_insert_with(|| make_ring(n)).clone()
    }

    // Total dimensions against the closed form.
    for n in 4..=top {
        let ring = ring_for(&mut rings, n);
        let (d, formula) = (ring.total_dimension(), d_of_n(n));
        push!(Check::new(
            format!("total dimension (n={n})"),
            d.to_string(),
            formula.to_string(),
            d == formula
        ));
    }

    // Hilbert functions against the pinned values, plus the quadratic part.
    for n in 4..=top {
        let ring = ring_for(&mut rings, n);
        let hf = ring.hilbert_function();
        let pinned = pinned_hilbert(n).expect("pinned for 4..=6");
        push!(Check::new(
            format!("hilbert function (n={n})"),
            format!("{hf:?}"),
            format!("{pinned:?}"),
            hf == pinned
        ));
        let square = ((n - 1) * (n - 1)) as u64;
        push!(Check::new(
            format!("linear-degree dimension is (n-1)^2 (n={n})"),
            hf[1].to_string(),
            square.to_string(),
            hf[1] == square
        ));
    }

    // Component-by-component agreement of the two dimension oracles.
    for n in 4..=top {
        let ring = ring_for(&mut rings, n);
        let mut mismatches = 0usize;
        let mut count = 0usize;
        for d in all_valid_multidegrees(n) {
            let lin = ring.dim(&d) as u64;
            let structural = structure_dim(&partition_of_multidegree(&d)?);
            count += 1;
            if lin != structural {
                mismatches += 1;
            }
        }
        push!(Check::new(
            format!("structure totals agree at every multidegree (n={n})"),
            format!("{mismatches} mismatches over {count} multidegrees"),
            format!("0 mismatches over {count} multidegrees"),
            mismatches == 0
        ));
    }

    // Socle placement.
    for n in 4..=top {
        let ring = ring_for(&mut rings, n);
        let (got, want) = (ring.min_socle_degree(), n.div_ceil(2));
        push!(Check::new(
            format!("minimal socle degree (n={n})"),
            got.to_string(),
            want.to_string(),
            got == want
        ));
    }
    {
        let ring = ring_for(&mut rings, 4);
        let socle_dim = ring.socle_dim_in_degree(2);
        push!(Check::new(
            "degree-two socle rank (n=4)",
            socle_dim.to_string(),
            "12",
            socle_dim == 12
        ));
        let (_, _, vectors) = selection_vectors(&ring, &QuotientSelection::FullMinimalSocle)?;
        let quotient = GcQuotient::new(Arc::clone(&ring), vectors);
        let hf = quotient.hilbert_function();
        push!(Check::new(
            "degree-two socle quotient hilbert function (n=4)",
            format!("{hf:?}"),
            "[1, 9, 9, 1]",
            hf == vec![1, 9, 9, 1]
        ));
    }
    for n in (4..=top).filter(|n| n % 2 == 0) {
        let ring = ring_for(&mut rings, n);
        let mut bad = Vec::new();
        for t in 1..n.div_ceil(2) {
            for d in valid_multidegrees(n, t) {
                let dim = ring.ann_m2_component(&d).dim();
                if dim > 0 {
                    bad.push(format!("{d}: {dim}"));
                }
            }
        }
        push!(Check::new(
            format!("square-radical annihilator vanishes below the socle degree (n={n})"),
            if bad.is_empty() { "all components zero".to_string() } else { bad.join("; ") },
            "all components zero",
            bad.is_empty()
        ));
    }

    // Negative tangents of the rings themselves.
    for n in 4..=top {
        let ring = ring_for(&mut rings, n);
        let opts = TangentOptions { early_exit: true, extra_degree, progress: n >= 6 };
        let report = tnt_check_with_options(&ring, &[], &opts)?;
        push!(Check::new(
            format!("negative tangents vanish (n={n})"),
            format!("tnt={}, dim={}", report.tnt, report.dim_t1_negative),
            "tnt=true, dim=0",
            report.tnt && report.dim_t1_negative == 0
        ));
    }
    {
        let pres = IdealPresentation::toy_square_zero();
        let toy = FreePresentedRing::from_presentation(&pres);
        let analysis = tnt_analyze(&pres, &toy as &dyn TangentTarget, &TangentOptions::default());
        push!(Check::new(
            "failure probe reports a genuine negative tangent (toy)",
            format!("trivial={}, witness={}", analysis.trivial, analysis.witness.is_some()),
            "trivial=false, witness=true",
            !analysis.trivial && analysis.witness.is_some()
        ));
    }

    // Socle quotients with the pinned generator counts.
    let quotient_runs: &[(usize, usize)] = match top {
        4 => &[(4, 12)],
        5 => &[(4, 12), (5, 40)],
        _ => &[(4, 12), (5, 40), (6, 50)],
    };
    for &(n, r) in quotient_runs {
        let ring = ring_for(&mut rings, n);
        let opts = TangentOptions { early_exit: true, extra_degree, progress: n >= 6 };
        let report = quotient_workflow_with_options(&ring, &QuotientSelection::Count(r), &opts)?;
        let tnt = report.tangent.as_ref().map(|t| t.tnt);
        let pass = report.low_socle.is_none()
            && tnt == Some(true)
            && report.hilbert_matches == Some(true);
        push!(Check::new(
            format!("socle quotient is a clean verdict (n={n}, r={r})"),
            format!(
                "tnt={tnt:?}, hilbert_matches={:?}, low_socle={}",
                report.hilbert_matches,
                report.low_socle.is_some()
            ),
            "tnt=Some(true), hilbert_matches=Some(true), low_socle=false",
            pass
        ));
    }
    if n_max == 7 {
        let ring = ring_for(&mut rings, 7);
        let opts = TangentOptions { early_exit: true, extra_degree, progress: true };
        let report =
            quotient_workflow_with_options(&ring, &QuotientSelection::FullMinimalSocle, &opts)?;
        let witness = report.low_socle.as_ref();
        let pass = witness.is_some_and(|w| w.multidegree.total() == 3) && report.tangent.is_none();
        push!(Check::new(
            "full minimal-socle quotient fails the low-socle hypothesis (n=7)",
            match witness {
                Some(w) => format!(
                    "socle class at {} (total {}), e.g. {}",
                    w.multidegree,
                    w.multidegree.total(),
                    w.representative
                ),
                None => "no socle below the minimal degree".to_string(),
            },
            "a socle class of total degree 3 below the minimal socle degree 4",
            pass
        ));
    }

    // Obstruction witnesses.
    {
        let ring = ring_for(&mut rings, 4);
        let report = t2_witness(&ring)?;
        push!(Check::new(
            "obstruction witness is inapplicable (n=4)",
            format!("applicable={}", report.applicable),
            "applicable=false",
            !report.applicable
        ));
    }
    for n in 5..=top {
        let ring = ring_for(&mut rings, n);
        let report = t2_witness(&ring)?;
        push!(Check::new(
            format!("obstruction witness is confirmed (n={n})"),
            format!(
                "nonzero={}, in_socle={}, outside_ideal={}, confirmed={}",
                report.nonzero, report.in_socle, report.outside_ideal, report.confirmed
            ),
            "nonzero=true, in_socle=true, outside_ideal=true, confirmed=true",
            report.confirmed
        ));
    }

    let all_pass = checks.iter().all(|c| c.pass);
    if !all_pass {
        let failing: Vec<&str> =
            checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        eprintln!("verify: FAILED: {}", failing.join("; "));
    }
    let report = with_envelope(
        "verify",
        json!({
            "n_max": n_max,
            "checks": checks
                .iter()
                .map(|c| json!({
                    "name": c.name,
                    "computed": c.computed,
                    "expected": c.expected,
                    "pass": c.pass,
                }))
                .collect::<Vec<_>>(),
            "all_pass": all_pass,
        }),
    );
    let output = if format == Format::Text {
        Output::Raw(verify_table(&checks, n_max, all_pass))
    } else {
        Output::Report(report)
    };
    Ok((output, if all_pass { 0 } else { 1 }))
}

fn verify_table(checks: &[Check], n_max: usize, all_pass: bool) -> String {
    let name_width = checks.iter().map(|c| c.name.len()).max().unwrap_or(4).max(5);
    let mut out = format!("verification battery up to n = {n_max}\n\n");
    out.push_str(&format!("{:<name_width$}  {:<6}  computed / expected\n", "check", "status"));
    out.push_str(&format!("{}  {}  {}\n", "-".repeat(name_width), "-".repeat(6), "-".repeat(19)));
    for c in checks {
        out.push_str(&format!(
            "{:<name_width$}  {:<6}  {} / {}\n",
            c.name,
            if c.pass { "pass" } else { "FAIL" },
            c.computed,
            c.expected
        ));
    }
    out.push_str(&format!(
        "\n{} of {} checks passed{}\n",
        checks.iter().filter(|c| c.pass).count(),
        checks.len(),
        if all_pass { "" } else { " — FAILURE" }
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(args).expect("test command lines parse")
    }

    #[test]
    fn rank_is_accepted_positionally_and_as_a_flag() {
        let a = parse(&["gclab", "dim", "4"]);
        let b = parse(&["gclab", "dim", "--n", "4"]);
        for cli in [a, b] {
            match cli.command {
                Command::Dim { rank } => assert_eq!(rank.get(), 4),
                other => panic!("parsed into {other:?}"),
            }
        }
        assert!(Cli::try_parse_from(["gclab", "dim"]).is_err());
        assert!(Cli::try_parse_from(["gclab", "dim", "4", "--n", "5"]).is_err());
    }

    #[test]
    fn conflicting_quotient_selections_are_rejected() {
        assert!(Cli::try_parse_from([
            "gclab", "tnt", "5", "--r", "40", "--full-minimal-socle"
        ])
        .is_err());
        assert!(Cli::try_parse_from([
            "gclab", "hilbert", "5", "--r", "40", "--select-multidegrees", "1,1,1,0"
        ])
        .is_err());
        let cli = parse(&["gclab", "tnt", "5", "--r", "40", "--extra-degree", "1"]);
        match cli.command {
            Command::Tnt { r, extra_degree, .. } => {
                assert_eq!(r, Some(40));
                assert_eq!(extra_degree, 1);
            }
            other => panic!("parsed into {other:?}"),
        }
    }

    #[test]
    fn multidegree_parsing_validates_shape() {
        assert_eq!(parse_multidegree("1,1,0", 4).unwrap(), Multidegree::new(vec![1, 1, 0]));
        assert_eq!(
            parse_multidegree_list("1,1,0;0,1,1", 4).unwrap(),
            vec![Multidegree::new(vec![1, 1, 0]), Multidegree::new(vec![0, 1, 1])]
        );
        assert!(parse_multidegree("1,1", 4).is_err());
        assert!(parse_multidegree("1,x,0", 4).is_err());
    }

    #[test]
    fn envelope_adds_schema_and_command() {
        let v = with_envelope("dim", json!({"n": 4}));
        assert_eq!(v["schema"], "gclab/1");
        assert_eq!(v["command"], "dim");
        assert_eq!(v["n"], 4);
    }

    #[test]
    fn csv_projection_flattens_and_escapes() {
        let v = json!({
            "a": [1, 2],
            "b": {"c": "x,y", "d": null},
            "e": true,
        });
        let csv = to_csv(&v);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines,
            vec!["key,value", "a.0,1", "a.1,2", "b.c,\"x,y\"", "b.d,", "e,true"]
        );
    }

    #[test]
    fn text_rendering_inlines_scalar_arrays() {
        let v = json!({"hilbert": [1, 9, 21, 1], "n": 4});
        let text = to_text(&v);
        assert_eq!(text, "hilbert: [1, 9, 21, 1]\nn: 4\n");
    }

    #[test]
    fn dim_command_reports_the_closed_form_agreement() {
        let (output, code) = cmd_dim(4).unwrap();
        let Output::Report(report) = output else { panic!("dim emits a report") };
        assert_eq!(code, 0);
        assert_eq!(report["d"], 32);
        assert_eq!(report["closed_form"], 32);
        assert_eq!(report["matches"], true);
        assert_eq!(report["by_total"], json!([1, 9, 21, 1]));
    }

    #[test]
    fn hilbert_command_handles_quotients() {
        let (output, code) = cmd_hilbert(4, Some(12), None).unwrap();
        let Output::Report(report) = output else { panic!("hilbert emits a report") };
        assert_eq!(code, 0);
        assert_eq!(report["hilbert"], json!([1, 9, 9, 1]));
        assert_eq!(report["matches"], true);
        assert_eq!(report["r"], 12);
    }

    #[test]
    fn socle_breakdown_rejects_out_of_range_degrees() {
        assert!(cmd_socle(4, Some(9)).is_err());
        let (output, _) = cmd_socle(4, Some(2)).unwrap();
        let Output::Report(report) = output else { panic!("socle emits a report") };
        assert_eq!(report["min_socle_degree"], 2);
        let breakdown = report["at_degree"].as_array().unwrap();
        let total: u64 = breakdown.iter().map(|e| e["dim"].as_u64().unwrap()).sum();
        assert_eq!(total, 12);
    }
}
