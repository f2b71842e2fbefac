//! Command-line front end. [`run`] holds the whole program so it can be
//! driven in-process; `main` only forwards `std::env::args`.
//!
//! Exit codes: 0 success or property holds, 1 property fails (witness
//! printed), 2 usage error, 3 size guard exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::hypergraph::recognize_with;
use crate::ipoly::{
    ipoly_antiregular_recurrence, ipoly_bruteforce_with, ipoly_k3_closed, ipoly_semiclosed,
    ipoly_trinks_with, is_log_concave, semiclosed_min_vertices,
};
use crate::sweep::run_sweep;
use crate::threshold::{
    algorithm1_labels, t2_feasibility_with, verify_t2_with, verify_t3_with, Labeling,
};
use crate::{BuildingString, Error, Guard, Hypergraph, Polynomial};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "antireg", version, about = "Antiregular and {0,1}-constructable k-uniform hypergraphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Lift the size caps on exhaustive routines (may run for a very long time).
    #[arg(long, global = true)]
    unsafe_no_guard: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Trinks,
    Recurrence,
    Closed,
    Semiclosed,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Trinks => "trinks",
            Method::Recurrence => "recurrence",
            Method::Closed => "closed",
            Method::Semiclosed => "semiclosed",
            Method::All => "all",
        }
    }
}

#[derive(Args, Debug)]
struct StringArgs {
    /// Binary building string, e.g. 0010100011101.
    #[arg(long)]
    string: String,
    /// Edge size.
    #[arg(long)]
    k: usize,
}

/// Either a building string with its k, or a hypergraph JSON file.
#[derive(Args, Debug)]
struct Source {
    #[arg(long, conflicts_with = "file", requires = "k")]
    string: Option<String>,
    #[arg(long, conflicts_with = "file", requires = "string")]
    k: Option<usize>,
    /// Hypergraph JSON: {"k": 3, "n": 5, "edges": [[1,2,3], ...]}.
    #[arg(long, required_unless_present = "string")]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Antiregular building string.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Connected variant (ends in a dominating vertex).
        #[arg(long)]
        connected: bool,
    },
    /// Hypergraph of a building string.
    Build(StringArgs),
    /// Independence polynomial.
    Ipoly {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Log-concavity of one string's polynomial and/or all antiregular ones up to --max-n.
    Logconcave {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        string: Option<String>,
        #[arg(long, required_unless_present = "string")]
        max_n: Option<usize>,
    },
    /// Threshold labeling of a constructable string.
    Label(StringArgs),
    /// Check a labeling against a hypergraph.
    VerifyT2 {
        #[command(flatten)]
        source: Source,
        /// Labeling JSON file, or `auto` to construct one from --string.
        #[arg(long)]
        labels: String,
    },
    /// Check pairwise comparability under replacement.
    VerifyT3 {
        #[command(flatten)]
        source: Source,
    },
    /// Vertex degrees.
    Degrees {
        #[command(flatten)]
        source: Source,
    },
    /// Decide whether any labeling works, with witness or certificate.
    FeasibleT2 {
        #[command(flatten)]
        source: Source,
    },
    /// Recover a building string and vertex order, if one exists.
    Recognize {
        #[command(flatten)]
        source: Source,
    },
    /// Exhaustive cross-checks over all small strings.
    Sweep {
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        n_max: usize,
    },
}

/// Result of one command before rendering.
struct Report {
    json: Value,
    text: String,
    code: i32,
}

impl Report {
    fn new(json: Value, text: impl Into<String>, holds: bool) -> Self {
        Report {
            json,
            text: text.into(),
            code: if holds { EXIT_OK } else { EXIT_FAILS },
        }
    }
}

/// A usage problem detected after parsing.
struct Usage(String);

enum Failure {
    Usage(Usage),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u)
    }
}

type CmdResult = std::result::Result<Report, Failure>;

/// Runs the program on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let guard = if cli.unsafe_no_guard {
        let _ = writeln!(err, "warning: size guards disabled; exhaustive routines may not finish");
        Guard::Ignore
    } else {
        Guard::Enforce
    };

    match execute(cli.command, guard) {
        Ok(report) => {
            let written = match cli.format {
                Format::Json => writeln!(out, "{}", pretty(&report.json)),
                Format::Text => writeln!(out, "{}", report.text),
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            report.code
        }
        Err(Failure::Usage(Usage(msg))) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::Inconsistent(_) => EXIT_FAILS,
        _ => EXIT_USAGE,
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize")
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types always serialize")
}

fn execute(command: Command, guard: Guard) -> CmdResult {
    match command {
        Command::Gen { n, k, connected } => {
            let b = BuildingString::antiregular(n, k, connected)?;
            Ok(Report::new(
                json!({ "n": n, "k": k, "connected": connected, "string": b.to_string() }),
                b.to_string(),
                true,
            ))
        }
        Command::Build(s) => {
            let h = Hypergraph::build(&BuildingString::parse(&s.string, s.k)?);
            Ok(Report::new(to_value(&h), hypergraph_text(&h), true))
        }
        Command::Ipoly { source, method } => ipoly(&source, method, guard),
        Command::Logconcave { k, string, max_n } => logconcave(k, string.as_deref(), max_n, guard),
        Command::Label(s) => {
            let l = algorithm1_labels(&BuildingString::parse(&s.string, s.k)?)?;
            Ok(Report::new(to_value(&l), labeling_text(&l), true))
        }
        Command::VerifyT2 { source, labels } => {
            let (h, b) = load(&source)?;
            let l = if labels == "auto" {
                let b = b.ok_or_else(|| {
                    Usage("--labels auto needs --string: labels are only constructed from a building string".into())
                })?;
                algorithm1_labels(&b)?
            } else {
                serde_json::from_str::<Labeling>(&read(Path::new(&labels))?).map_err(Error::from)?
            };
            let v = verify_t2_with(&h, &l, guard)?;
            let text = match &v.witness {
                None => "T2 holds".to_string(),
                Some(s) => format!("T2 fails: subset {s:?} misclassified"),
            };
            Ok(Report::new(to_value(&v), text, v.holds))
        }
        Command::VerifyT3 { source } => {
            let (h, _) = load(&source)?;
            let v = verify_t3_with(&h, guard)?;
            let text = match v.witness {
                None => "T3 holds".to_string(),
                Some((x, y)) => format!("T3 fails: vertices {x} and {y} are incomparable"),
            };
            Ok(Report::new(to_value(&v), text, v.holds))
        }
        Command::Degrees { source } => {
            let (h, _) = load(&source)?;
            let d = h.degree_sequence();
            let repeat = d
                .sole_repeat()
                .map(|(degree, multiplicity)| json!({ "degree": degree, "multiplicity": multiplicity }));
            let text = d.degrees().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            Ok(Report::new(
                json!({ "degrees": d.degrees(), "sole_repeat": repeat }),
                text,
                true,
            ))
        }
        Command::FeasibleT2 { source } => {
            let (h, _) = load(&source)?;
            let v = t2_feasibility_with(&h, guard)?;
            let text = match (&v.witness, &v.certificate) {
                (Some(l), _) => format!("feasible\n{}", labeling_text(l)),
                (None, Some(c)) => {
                    let mut lines = vec!["infeasible; certificate:".to_string()];
                    lines.extend(c.terms.iter().map(|t| {
                        format!("  {} x {:?} ({})", t.weight, t.subset, if t.edge { "edge" } else { "non-edge" })
                    }));
                    lines.join("\n")
                }
                (None, None) => "infeasible".to_string(),
            };
            Ok(Report::new(to_value(&v), text, v.feasible))
        }
        Command::Recognize { source } => {
            let (h, _) = load(&source)?;
            Ok(match recognize_with(&h, guard)? {
                Some(r) => Report::new(
                    json!({
                        "constructable": true,
                        "k": r.string.k(),
                        "string": r.string.to_string(),
                        "order": r.order,
                    }),
                    format!("{} order {:?}", r.string, r.order),
                    true,
                ),
                None => Report::new(
                    json!({ "constructable": false }),
                    "not {0,1}-constructable",
                    false,
                ),
            })
        }
        Command::Sweep { k_max, n_max } => {
            let pool = worker_pool()?;
            let report = pool.install(|| run_sweep(k_max, n_max, guard))?;
            let mut text = format!(
                "k <= {k_max}, n <= {n_max}: {} antiregular, {} constructable, {} checks, {} disagreements",
                report.antiregular_instances,
                report.constructable_instances,
                report.checks,
                report.disagreements.len()
            );
            for d in &report.disagreements {
                text.push_str(&format!("\n  k={} n={} {} [{}] {}", d.k, d.n, d.string, d.check, d.detail));
            }
            Ok(Report::new(to_value(&report), text, report.ok()))
        }
    }
}

/// Rayon pool sized by `NUM_WORKERS` when set.
fn worker_pool() -> std::result::Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var("NUM_WORKERS") {
        let n: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Usage(format!("NUM_WORKERS must be a positive integer, got {raw:?}")))?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Failure::Usage(Usage(format!("cannot start worker pool: {e}"))))
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())).into())
}

fn load(source: &Source) -> std::result::Result<(Hypergraph, Option<BuildingString>), Failure> {
    match (&source.string, source.k, &source.file) {
        (Some(s), Some(k), None) => {
            let b = BuildingString::parse(s, k)?;
            Ok((Hypergraph::build(&b), Some(b)))
        }
        (None, None, Some(path)) => {
            let h: Hypergraph = serde_json::from_str(&read(path)?).map_err(Error::from)?;
            Ok((h, None))
        }
        _ => Err(Usage("give either --string with --k, or --file".into()).into()),
    }
}

fn ipoly(source: &Source, method: Method, guard: Guard) -> CmdResult {
    let (h, b) = load(source)?;
    // Antiregular methods need the input to be one of the two antiregular strings.
    let antiregular = b.as_ref().and_then(|b| b.antiregular_kind().map(|c| (b.len(), b.k(), c)));

    let applicable: Vec<Method> = [
        Method::Brute,
        Method::Trinks,
        Method::Recurrence,
        Method::Semiclosed,
        Method::Closed,
    ]
    .into_iter()
    .filter(|m| match m {
        Method::Recurrence => antiregular.is_some(),
        Method::Semiclosed => antiregular.is_some_and(|(n, k, _)| n >= semiclosed_min_vertices(k)),
        Method::Closed => antiregular.is_some_and(|(_, k, _)| k == 3),
        _ => true,
    })
    .collect();

    let chosen = match method {
        Method::All => applicable,
        m if applicable.contains(&m) => vec![m],
        m => {
            return Err(Usage(format!(
                "method {} does not apply to this input (applicable: {})",
                m.name(),
                applicable.iter().map(|m| m.name()).collect::<Vec<_>>().join(", ")
            ))
            .into())
        }
    };

    let mut results: Vec<(Method, Polynomial)> = Vec::new();
    for m in chosen {
        let p = match (m, antiregular) {
            (Method::Brute, _) => ipoly_bruteforce_with(&h, guard)?,
            (Method::Trinks, _) => ipoly_trinks_with(&h, guard, true)?,
            (Method::Recurrence, Some((n, k, c))) => ipoly_antiregular_recurrence(n, k, c)?,
            (Method::Semiclosed, Some((n, k, c))) => ipoly_semiclosed(n, k, c)?,
            (Method::Closed, Some((n, _, c))) => ipoly_k3_closed(n, c)?,
            _ => unreachable!("filtered above"),
        };
        results.push((m, p));
    }

    if let [(m, p)] = results.as_slice() {
        return Ok(Report::new(
            json!({ "method": m.name(), "coefficients": p }),
            p.to_string(),
            true,
        ));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let methods: serde_json::Map<String, Value> =
        results.iter().map(|(m, p)| (m.name().to_string(), to_value(p))).collect();
    let text = results
        .iter()
        .map(|(m, p)| format!("{}: {p}", m.name()))
        .chain([format!("agree: {agree}")])
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report::new(json!({ "methods": methods, "agree": agree }), text, agree))
}

fn logconcave(k: usize, string: Option<&str>, max_n: Option<usize>, guard: Guard) -> CmdResult {
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    let mut all_hold = true;
    if let Some(s) = string {
        let b = BuildingString::parse(s, k)?;
        let p = ipoly_trinks_with(&Hypergraph::build(&b), guard, true)?;
        let r = is_log_concave(&p);
        all_hold &= r.holds;
        lines.push(format!("{b}: {} ({p})", verdict_word(r.holds)));
        entries.push(json!({
            "string": b.to_string(),
            "coefficients": p,
            "holds": r.holds,
            "first_violation": r.first_violation,
        }));
    }
    if let Some(max_n) = max_n {
        if max_n == 0 {
            return Err(Usage("--max-n must be at least 1".into()).into());
        }
        let series = crate::ipoly::antiregular_series(max_n, k)?;
        for (n, (conn, disc)) in series.iter().enumerate().skip(1) {
            for (connected, p) in [(true, conn), (false, disc)] {
                let r = is_log_concave(p);
                all_hold &= r.holds;
                if !r.holds {
                    lines.push(format!("n={n} connected={connected}: fails at {:?}", r.first_violation));
                }
                entries.push(json!({
                    "n": n,
                    "connected": connected,
                    "holds": r.holds,
                    "first_violation": r.first_violation,
                }));
            }
        }
        lines.push(format!(
            "antiregular k={k}, n <= {max_n}: {}",
            verdict_word(all_hold)
        ));
    }
    Ok(Report::new(
        json!({ "k": k, "holds": all_hold, "results": entries }),
        lines.join("\n"),
        all_hold,
    ))
}

fn verdict_word(holds: bool) -> &'static str {
    if holds {
        "log-concave"
    } else {
        "not log-concave"
    }
}

fn hypergraph_text(h: &Hypergraph) -> String {
    let mut lines = vec![format!(
        "n={} k={} edges={}",
        h.n(),
        h.uniformity().map_or("-".to_string(), |k| k.to_string()),
        h.edge_count()
    )];
    lines.extend(
        h.edges()
            .iter()
            .map(|e| e.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")),
    );
    lines.join("\n")
}

fn labeling_text(l: &Labeling) -> String {
    let c = l.c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    format!("c = {c}\ntau = {}", l.tau)
}
