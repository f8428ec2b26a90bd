//! Scriptable command-line surface for exact analysis of conjugacy-class
//! random walks on symmetric groups: character tables, distributions,
//! likelihood-order checks and certificates, distance-to-stationarity
//! curves, coset-uniform splits, and detector listings.
//!
//! Every run is deterministic (identical invocation, byte-identical
//! output) and every probability is an exact fraction; `--approx` adds a
//! decimal column where it helps a human skim. Exit codes: `0` success,
//! `2` for any problem with the request, `3` for a broken internal
//! invariant.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symwalk_core::arith::to_f64_lossy;
use symwalk_core::{
    builtin_walk, check_order, distribution, enumerate_partitions, linf_distance, separation,
    stabilization_survey, stationary_split, tv_distance, CharacterTable, Error, OrderKind,
    Parity, Partition, WalkKind, WalkSpec,
};

/// A failed run: library errors keep their own classification, filesystem
/// problems get their own bucket. Everything except a broken internal
/// invariant is the caller's problem and exits with code 2.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Internal(_)) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

#[derive(Parser)]
#[command(
    name = "symwalk",
    version,
    about = "Exact character tables, distributions, and likelihood orders for conjugacy-class random walks on S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report to this path (atomically) instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WalkArgs {
    /// Walk to analyze: transposition | lazy:<p> | three-cycle | n-cycle | custom:<path>
    #[arg(long)]
    walk: String,
    /// Degree of the symmetric group
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full character table of S_n (supported for n <= 14)
    Chars {
        /// Degree of the symmetric group
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact per-element class probabilities of a walk at one time
    Dist {
        #[command(flatten)]
        walk: WalkArgs,
        /// Number of steps
        #[arg(long)]
        t: u64,
        /// Add a decimal approximation column
        #[arg(long)]
        approx: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check one time for inversions against an order, or certify the
    /// eventual order pair by pair (--stabilize)
    Order {
        #[command(flatten)]
        walk: WalkArgs,
        /// Time to check for inversions (among the classes of the coset the
        /// walk occupies at that time)
        #[arg(long, conflicts_with = "stabilize")]
        t: Option<u64>,
        /// Certify every pairwise eventual sign instead of checking one time
        #[arg(long)]
        stabilize: bool,
        /// Order to check against: cl | neg-cl | alt-cl | majorization |
        /// reverse-lex | lulov-lex (required with --t, optional with --stabilize)
        #[arg(long)]
        kind: Option<String>,
        /// Restrict certification to even or odd times; the default "any"
        /// certifies one sign over both parities at once
        #[arg(long)]
        time_parity: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Total variation, separation, and l-infinity distance to the
    /// (parity-restricted) uniform distribution for t = 0..=tmax
    Tv {
        #[command(flatten)]
        walk: WalkArgs,
        /// Last time of the curve
        #[arg(long)]
        tmax: u64,
        /// Add decimal approximation columns
        #[arg(long)]
        approx: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Which side of the coset-uniform probability each class sits on,
    /// against the fixed-point/two-cycle prediction
    Split {
        #[command(flatten)]
        walk: WalkArgs,
        /// Number of steps
        #[arg(long)]
        t: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the shapes whose characters can see i-cycle counts
    Detector {
        /// Degree of the symmetric group
        #[arg(long)]
        n: u32,
        /// Cycle length whose detectors to list
        #[arg(long)]
        i: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_thread_pool().and_then(|()| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}

/// Applies the `SYMWALK_THREADS` cap before any parallel work starts.
fn init_thread_pool() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("SYMWALK_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&k| k >= 1)
        .ok_or_else(|| {
            Error::Parse(format!(
                "SYMWALK_THREADS must be a positive integer, got {raw:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Lib(Error::Internal(format!("thread pool setup failed: {e}"))))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Chars { n, output } => {
            let table = CharacterTable::build(n)?;
            let text = match output.format {
                Format::Json => pretty(table.to_json()),
                Format::Csv => table.to_csv(),
            };
            emit(output.out.as_deref(), text)
        }
        Command::Dist {
            walk,
            t,
            approx,
            output,
        } => {
            let walk = parse_walk(&walk.walk, walk.n)?;
            let dist = distribution(&walk, t)?;
            let text = match output.format {
                Format::Json => pretty(dist.to_json(approx)),
                Format::Csv => dist.to_csv(approx),
            };
            emit(output.out.as_deref(), text)
        }
        Command::Order {
            walk,
            t,
            stabilize,
            kind,
            time_parity,
            output,
        } => {
            let spec = parse_walk(&walk.walk, walk.n)?;
            let kind = kind.as_deref().map(OrderKind::from_str).transpose()?;
            let text = match (t, stabilize) {
                (Some(t), false) => {
                    if time_parity.is_some() {
                        return Err(Error::Parse(
                            "--time-parity only applies to --stabilize runs".into(),
                        )
                        .into());
                    }
                    order_at_time(&spec, t, kind, output.format)?
                }
                (None, true) => order_certified(
                    &spec,
                    time_parity.as_deref().unwrap_or("any"),
                    kind,
                    output.format,
                )?,
                _ => {
                    return Err(Error::Parse(
                        "order needs either --t <time> or --stabilize".into(),
                    )
                    .into())
                }
            };
            emit(output.out.as_deref(), text)
        }
        Command::Tv {
            walk,
            tmax,
            approx,
            output,
        } => {
            let walk = parse_walk(&walk.walk, walk.n)?;
            let text = distance_curve(&walk, tmax, approx, output.format)?;
            emit(output.out.as_deref(), text)
        }
        Command::Split { walk, t, output } => {
            let walk = parse_walk(&walk.walk, walk.n)?;
            let dist = distribution(&walk, t)?;
            let report = stationary_split(&walk, &dist)?;
            if !report.all_agree() {
                eprintln!(
                    "warning: {} class(es) sit on the unpredicted side of uniform at t={t}",
                    report.disagreements()
                );
            }
            let text = match output.format {
                Format::Json => pretty(report.to_json()),
                Format::Csv => report.to_csv(),
            };
            emit(output.out.as_deref(), text)
        }
        Command::Detector { n, i, output } => {
            let detectors: Vec<Partition> = enumerate_partitions(n)?
                .into_iter()
                .filter(|p| p.is_cycle_detector(i))
                .collect();
            let text = match output.format {
                Format::Json => pretty(serde_json::json!({
                    "n": n,
                    "i": i,
                    "detectors": detectors.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut out = String::from("partition\n");
                    for p in &detectors {
                        out.push_str(&csv_field(&p.to_string()));
                        out.push('\n');
                    }
                    out
                }
            };
            emit(output.out.as_deref(), text)
        }
    }
}

/// Resolves `transposition | lazy:<p> | three-cycle | n-cycle` as a builtin
/// and `custom:<path>` as a walk file, checking the file's degree against
/// the requested one.
fn parse_walk(spec: &str, n: u32) -> Result<WalkSpec, Failure> {
    if let Some(path) = spec.strip_prefix("custom:") {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read walk file {path}: {e}")))?;
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("walk file {path}: {e}")))?;
        let walk = WalkSpec::from_json(&value)?;
        if walk.n() != n {
            return Err(Error::Domain(format!(
                "walk file {path} is a walk on S_{}, but --n is {n}",
                walk.n()
            ))
            .into());
        }
        Ok(walk)
    } else {
        let kind: WalkKind = spec.parse()?;
        Ok(builtin_walk(&kind, n)?)
    }
}

/// `order --t`: inversions against the order among the classes of the coset
/// the walk occupies at time `t`.
fn order_at_time(
    walk: &WalkSpec,
    t: u64,
    kind: Option<OrderKind>,
    format: Format,
) -> Result<String, Failure> {
    let kind = kind.ok_or_else(|| {
        Error::Parse("order --t needs --kind to know which order to check".into())
    })?;
    let dist = distribution(walk, t)?;
    let classes = walk.reachable_classes(t)?;
    let inversions = check_order(&dist, kind, &classes)?;
    Ok(match format {
        Format::Json => pretty(serde_json::json!({
            "n": walk.n(),
            "walk": walk.label(),
            "t": t,
            "kind": kind.to_string(),
            "inversions": inversions.iter().map(|(hi, lo)| serde_json::json!({
                "higher": hi.to_string(),
                "lower": lo.to_string(),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("higher,lower\n");
            for (hi, lo) in &inversions {
                out.push_str(&format!("{hi},{lo}\n"));
            }
            out
        }
    })
}

/// `order --stabilize`: the full pairwise certification survey, with any
/// uncertified pairs and order mismatches called out on standard error.
fn order_certified(
    walk: &WalkSpec,
    time_parity: &str,
    kind: Option<OrderKind>,
    format: Format,
) -> Result<String, Failure> {
    let parity: Parity = time_parity.parse()?;
    let survey = stabilization_survey(walk, parity)?;
    for cert in survey.uncertified() {
        if let symwalk_core::CertOutcome::Uncertified { reason } = cert.outcome() {
            eprintln!(
                "warning: {} | {} not certified: {reason}",
                cert.alpha(),
                cert.beta()
            );
        }
    }
    let mismatches = match kind {
        Some(kind) => Some((kind, survey.mismatches(kind)?)),
        None => None,
    };
    if let Some((kind, pairs)) = &mismatches {
        if !pairs.is_empty() {
            eprintln!(
                "warning: {} certified pair(s) contradict the {kind} order",
                pairs.len()
            );
        }
    }
    Ok(match format {
        Format::Json => {
            let mut value = survey.to_json();
            if let Some((kind, pairs)) = &mismatches {
                value["kind"] = serde_json::json!(kind.to_string());
                value["mismatches"] = serde_json::json!(pairs
                    .iter()
                    .map(|(hi, lo)| serde_json::json!({
                        "certified_higher": hi.to_string(),
                        "certified_lower": lo.to_string(),
                    }))
                    .collect::<Vec<_>>());
            }
            pretty(value)
        }
        Format::Csv => survey.to_csv(),
    })
}

/// `tv`: one row per time with the three exact distances to the
/// coset-uniform distribution.
fn distance_curve(
    walk: &WalkSpec,
    tmax: u64,
    approx: bool,
    format: Format,
) -> Result<String, Failure> {
    let mut rows = Vec::with_capacity(tmax as usize + 1);
    for t in 0..=tmax {
        let dist = distribution(walk, t)?;
        let tv = tv_distance(walk, &dist)?;
        let sep = separation(walk, &dist)?;
        let linf = linf_distance(walk, &dist)?;
        rows.push((t, tv, sep, linf));
    }
    Ok(match format {
        Format::Json => pretty(serde_json::json!({
            "n": walk.n(),
            "walk": walk.label(),
            "tmax": tmax,
            "rows": rows.iter().map(|(t, tv, sep, linf)| {
                let mut row = serde_json::json!({
                    "t": t,
                    "tv": { "num": tv.numer().to_string(), "den": tv.denom().to_string() },
                    "sep": { "num": sep.numer().to_string(), "den": sep.denom().to_string() },
                    "linf": { "num": linf.numer().to_string(), "den": linf.denom().to_string() },
                });
                if approx {
                    row["tv"]["approx"] = serde_json::json!(to_f64_lossy(tv));
                    row["sep"]["approx"] = serde_json::json!(to_f64_lossy(sep));
                    row["linf"]["approx"] = serde_json::json!(to_f64_lossy(linf));
                }
                row
            }).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("t,tv_num,tv_den,sep_num,sep_den,linf_num,linf_den");
            if approx {
                out.push_str(",tv_approx,sep_approx,linf_approx");
            }
            out.push('\n');
            for (t, tv, sep, linf) in &rows {
                out.push_str(&format!(
                    "{t},{},{},{},{},{},{}",
                    tv.numer(),
                    tv.denom(),
                    sep.numer(),
                    sep.denom(),
                    linf.numer(),
                    linf.denom()
                ));
                if approx {
                    out.push_str(&format!(
                        ",{:e},{:e},{:e}",
                        to_f64_lossy(tv),
                        to_f64_lossy(sep),
                        to_f64_lossy(linf)
                    ));
                }
                out.push('\n');
            }
            out
        }
    })
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("JSON reports serialize")
}

/// Quotes a CSV field exactly when it needs it (partition labels contain
/// commas).
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Prints to standard output, or writes the whole report through a
/// temporary file in the target directory so the destination is never left
/// half-written.
fn emit(out: Option<&Path>, mut content: String) -> Result<(), Failure> {
    if !content.ends_with('\n') {
        content.push('\n');
    }
    let Some(path) = out else {
        print!("{content}");
        return Ok(());
    };
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| Failure::Io(format!("cannot create a temporary file in {}: {e}", dir.display())))?;
    tmp.write_all(content.as_bytes())
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    tmp.persist(path)
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}
