//! Command-line front end: g-polynomials, Tutte polynomials, admissible
//! path listings, matroid facts, catalog listing, and the self-check suite.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a property violation,
//! 2 for usage or input errors. Diagnostics go to stderr; results to stdout.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gpoly::catalog::{catalog_lookup, catalog_names, parse_matroid, realize, Realized};
use gpoly::decomp::g_polynomial;
use gpoly::poly::IntPolynomial;
use gpoly::schubert::SchubertMatroid;
use gpoly::verify::{run_all, shifted_g, VerifyOptions};
use gpoly::ElementOrder;

#[derive(Parser)]
#[command(
    name = "gpoly",
    version,
    about = "g-polynomials of matroids by path counting, basis activities, \
             and cyclic-flat decomposition"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the g-polynomial of a matroid
    G(GArgs),
    /// Compute the Tutte polynomial (activity sum over bases)
    Tutte(TutteArgs),
    /// Report structural facts: rank, connectivity, beta, cyclic flats, g
    Info(InfoArgs),
    /// Count or list the admissible Delannoy paths of a Schubert matroid
    Delannoy(DelannoyArgs),
    /// Run the cross-method self-check suite
    Verify(VerifyArgs),
    /// List the named catalog entries
    Catalog,
}

/// Input selection shared by the computing subcommands: exactly one of a
/// JSON file, a catalog name, or an inline Schubert matroid.
#[derive(Args)]
#[command(group = ArgGroup::new("input").required(true).args(["file", "name", "schubert"]))]
struct InputArgs {
    /// JSON matroid description file
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Catalog entry (see `gpoly catalog`)
    #[arg(long, value_name = "NAME")]
    name: Option<String>,

    /// Parameters for --name, e.g. "r=2,n=4"
    #[arg(long, value_name = "K=V,...", requires = "name")]
    params: Option<String>,

    /// Ground set size of an inline Schubert matroid
    #[arg(long, value_name = "N", requires = "upper")]
    schubert: Option<usize>,

    /// Upper set of the inline Schubert matroid, e.g. "1,3,5"
    #[arg(long, value_name = "LIST", requires = "schubert")]
    upper: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Activities for Schubert input, decomposition otherwise
    Auto,
    /// Count admissible Delannoy paths (Schubert input only)
    Delannoy,
    /// Sum basis activities (Schubert input only)
    Activities,
    /// Cyclic-flat-chain decomposition (any input)
    Decomposition,
}

#[derive(Args)]
struct GArgs {
    #[command(flatten)]
    input: InputArgs,

    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,

    /// Also print the shifted form (g/t)(t-1)
    #[arg(long)]
    shifted: bool,

    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TutteArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct InfoArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DelannoyArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Print one path word per line instead of the counts
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest ground set for the exhaustive Schubert sweeps
    #[arg(long, value_name = "N", default_value_t = 8)]
    max_n: usize,

    /// Check only this many sampled upper sets per ground-set size
    #[arg(long, value_name = "K")]
    samples: Option<usize>,

    /// Seed for sampling and random element orders
    #[arg(long, value_name = "SEED", default_value_t = 0)]
    seed: u64,
}

/// An error annotated with the process exit code it should produce.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<gpoly::Error> for Failure {
    fn from(e: gpoly::Error) -> Self {
        Failure::input(e.to_string())
    }
}

/// Restore the default SIGPIPE disposition so that piping into a pager or
/// `head` terminates the process quietly instead of panicking on a failed
/// write.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::G(args) => run_g(args),
        Cmd::Tutte(args) => run_tutte(args),
        Cmd::Info(args) => run_info(args),
        Cmd::Delannoy(args) => run_delannoy(args),
        Cmd::Verify(args) => run_verify(args),
        Cmd::Catalog => run_catalog(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_params(text: &str) -> Result<BTreeMap<String, usize>, Failure> {
    let mut params = BTreeMap::new();
    for piece in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (key, value) = piece
            .split_once('=')
            .ok_or_else(|| Failure::input(format!("parameter {piece:?} is not of the form key=value")))?;
        let value: usize = value.trim().parse().map_err(|_| {
            Failure::input(format!("parameter {piece:?} needs a nonnegative integer value"))
        })?;
        params.insert(key.trim().to_string(), value);
    }
    Ok(params)
}

fn parse_upper(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Failure::input(format!("upper-set entry {p:?} is not an integer")))
        })
        .collect()
}

/// Load the selected input; returns the optional label for display.
fn load(input: &InputArgs) -> Result<(Option<String>, Realized), Failure> {
    if let Some(path) = &input.file {
        let bytes = std::fs::read(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
        let spec = parse_matroid(&bytes)?;
        let label = spec.label.clone();
        return Ok((label, realize(&spec)?));
    }
    if let Some(name) = &input.name {
        let params = match &input.params {
            Some(text) => parse_params(text)?,
            None => BTreeMap::new(),
        };
        let spec = catalog_lookup(name, &params)?;
        let label = spec.label.clone().or_else(|| Some(name.clone()));
        return Ok((label, realize(&spec)?));
    }
    let n = input.schubert.expect("clap guarantees one selector");
    let upper = parse_upper(input.upper.as_deref().expect("required with --schubert"))?;
    Ok((None, Realized::Schubert(SchubertMatroid::new(n, upper)?)))
}

/// The Schubert structure of the input, or an input error naming `method`.
fn need_schubert<'a>(realized: &'a Realized, method: &str) -> Result<&'a SchubertMatroid, Failure> {
    realized.as_schubert().ok_or_else(|| {
        Failure::input(format!(
            "the {method} method needs a Schubert matroid input \
             (--schubert N --upper LIST, or a schubert-form description)"
        ))
    })
}

fn run_g(args: GArgs) -> Result<(), Failure> {
    let (_, realized) = load(&args.input)?;
    let g = match args.method {
        Method::Auto => match &realized {
            Realized::Schubert(s) if clean(s) => s.g_activities()?,
            Realized::Schubert(_) => IntPolynomial::zero(),
            Realized::General(m) => g_polynomial(m),
        },
        Method::Delannoy => need_schubert(&realized, "delannoy")?.g_delannoy()?,
        Method::Activities => need_schubert(&realized, "activities")?.g_activities()?,
        Method::Decomposition => g_polynomial(&realized.into_matroid()),
    };
    let shifted = if args.shifted {
        Some(shifted_g(&g)?)
    } else {
        None
    };
    if args.json {
        let mut out = json!({ "g": { "coeffs": g.coeffs_i64()? } });
        if let Some(s) = &shifted {
            out["shifted"] = json!({ "coeffs": s.coeffs_i64()? });
        }
        println!("{out}");
    } else {
        println!("{g}");
        if let Some(s) = &shifted {
            println!("{s}");
        }
    }
    Ok(())
}

fn clean(s: &SchubertMatroid) -> bool {
    let (loops, coloops) = s.loops_coloops();
    loops.is_empty() && coloops.is_empty()
}

fn run_tutte(args: TutteArgs) -> Result<(), Failure> {
    let (_, realized) = load(&args.input)?;
    let m = realized.into_matroid();
    let tutte = m.tutte(&ElementOrder::identity(m.n()));
    if args.json {
        println!("{}", json!({ "tutte": { "rows": tutte.rows_i64()? } }));
    } else {
        println!("{tutte}");
    }
    Ok(())
}

fn run_info(args: InfoArgs) -> Result<(), Failure> {
    let (label, realized) = load(&args.input)?;
    let m = realized.into_matroid();
    let (loops, coloops) = m.loops_coloops();
    let components = m.connected_components().len();
    let cyclic_flats = m.cyclic_flats().len();
    let beta = m.beta();
    let g = g_polynomial(&m);
    let tutte = m.tutte(&ElementOrder::identity(m.n()));

    if args.json {
        let mut out = json!({
            "elements": m.n(),
            "rank": m.rank(),
            "bases": m.num_bases(),
            "loops": loops.to_vec(),
            "coloops": coloops.to_vec(),
            "connected": m.is_connected(),
            "components": components,
            "beta": beta,
            "cyclic_flats": cyclic_flats,
            "g": { "coeffs": g.coeffs_i64()? },
            "tutte": { "rows": tutte.rows_i64()? },
        });
        if let Some(l) = label {
            out["label"] = json!(l);
        }
        println!("{out}");
        return Ok(());
    }

    let mut text = String::new();
    if let Some(l) = label {
        let _ = writeln!(text, "label: {l}");
    }
    let _ = writeln!(text, "elements: {}", m.n());
    let _ = writeln!(text, "rank: {}", m.rank());
    let _ = writeln!(text, "bases: {}", m.num_bases());
    let _ = writeln!(text, "loops: {loops}");
    let _ = writeln!(text, "coloops: {coloops}");
    let _ = writeln!(text, "connected: {}", if m.is_connected() { "yes" } else { "no" });
    let _ = writeln!(text, "components: {components}");
    let _ = writeln!(text, "beta: {beta}");
    let _ = writeln!(text, "cyclic flats: {cyclic_flats}");
    let _ = writeln!(text, "g: {g}");
    let _ = writeln!(text, "tutte: {tutte}");
    print!("{text}");
    Ok(())
}

fn run_delannoy(args: DelannoyArgs) -> Result<(), Failure> {
    let (_, realized) = load(&args.input)?;
    let s = need_schubert(&realized, "delannoy")?;
    let paths = s.admissible_paths()?; // loops/coloops surface here as input errors
    if args.list {
        for p in &paths {
            println!("{p}");
        }
        return Ok(());
    }
    let max_d = paths.iter().map(|p| p.diagonals()).max().unwrap_or(0);
    let mut counts = vec![0usize; max_d + 1];
    for p in &paths {
        counts[p.diagonals()] += 1;
    }
    let line: Vec<String> = counts
        .iter()
        .enumerate()
        .map(|(d, c)| format!("d={d}: {c}"))
        .collect();
    println!("{}", line.join(", "));
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.max_n > 12 {
        return Err(Failure::input(
            "--max-n larger than 12 is not supported (the sweeps grow exponentially)",
        ));
    }
    if args.max_n == 0 {
        return Err(Failure::input("--max-n must be at least 1"));
    }
    let opts = VerifyOptions { max_n: args.max_n, samples: args.samples, seed: args.seed };
    let mut all_passed = true;
    for outcome in run_all(&opts) {
        match &outcome.failure {
            None => println!("PASS {} ({} instances)", outcome.name, outcome.instances),
            Some(why) => {
                all_passed = false;
                println!("FAIL {}: {why}", outcome.name);
            }
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure { code: 1, message: "self-check found counterexamples".into() })
    }
}

fn run_catalog() -> Result<(), Failure> {
    for (name, description) in catalog_names() {
        println!("{name:<10} {description}");
    }
    Ok(())
}
