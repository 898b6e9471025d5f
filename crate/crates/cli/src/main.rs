//! `gwa`: command-line front end for gwa-kit.

mod text;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gwa_kit::{
    b_mul, b_props, check_sc, classify_simples, coverage, factor_profile, from_profile, global_dimension,
    involute, is_projective_sc, is_simple, max_embedding, minimal_primes, morita_context, noeth_chain_check,
    normalize, oracle_dim_limit, orbit_decomposition, presentation, sc_iso, standard_indices, BElement,
    BIndex, FactorProfile, GlobalDimension, Gwa, GwaSpec, Orbit, Poly, Rational, StructureConstants,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "gwa", version, about = "Exact computations with generalized Weyl algebras")]
struct Cli {
    /// Algebra as inline JSON, e.g. '{"base":"additive","f":[{"root":"0","mult":2}]}'.
    #[arg(long, global = true)]
    spec: Option<String>,

    /// Path to a file holding the algebra JSON.
    #[arg(long, global = true, value_name = "PATH")]
    spec_file: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Orbits of the roots, global dimension and simplicity.
    Analyze,
    /// Graded simple modules up to shift.
    Simples,
    /// Reduce to the canonical algebra with one root per orbit.
    Normalize,
    /// Morita context for moving a simple root one step.
    Morita {
        #[arg(long, allow_hyphen_values = true)]
        beta: Rational,
    },
    /// Rank-one graded projectives given by structure constants.
    Proj {
        #[command(subcommand)]
        verb: ProjVerb,
    },
    /// The commutative ring B and its truncations.
    Bring {
        #[command(subcommand)]
        verb: BringVerb,
    },
}

#[derive(Subcommand)]
enum ProjVerb {
    /// Check structure constants and print them in normalized form.
    Validate {
        #[arg(long)]
        sc: String,
    },
    /// Whether two sets of structure constants define isomorphic modules.
    Iso {
        #[arg(long)]
        sc: String,
        #[arg(long)]
        other: String,
    },
    /// Whether the module is projective.
    Projective {
        #[arg(long)]
        sc: String,
    },
    /// Sign profile of a projective.
    Profile {
        #[arg(long)]
        sc: String,
        #[arg(long, allow_negative_numbers = true, requires = "to")]
        from: Option<i64>,
        #[arg(long, allow_negative_numbers = true, requires = "from")]
        to: Option<i64>,
    },
    /// Structure constants of the projective with a given profile.
    FromProfile {
        #[arg(long)]
        profile: String,
    },
    /// Largest embedding of the first module into the second.
    Embed {
        #[arg(long)]
        sc: String,
        #[arg(long)]
        other: String,
    },
    /// Toggle the factor of root `alpha` at index `j`.
    Involute {
        #[arg(long)]
        sc: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Rational,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
    },
    /// Which simple modules in a shift window a family maps onto.
    Coverage {
        /// JSON array of structure constants.
        #[arg(long)]
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        /// Also count involution translates of projective members.
        #[arg(long)]
        iota: bool,
    },
}

#[derive(Subcommand)]
enum BringVerb {
    /// Product of two elements.
    Mul {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Presentation of a truncation.
    Present {
        #[command(flatten)]
        window: Window,
    },
    /// Minimal primes of a truncation.
    Minprimes {
        #[command(flatten)]
        window: Window,
    },
    /// Certificate for a strictly ascending chain of ideals in B_m.
    Chain {
        #[arg(long)]
        m: usize,
    },
    /// Domain, rank and reducedness properties of B_m.
    Props {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Args)]
struct Window {
    /// JSON array of generator indices, e.g. [[1,0],[1,1]].
    #[arg(long, conflicts_with = "m")]
    window: Option<String>,
    /// Use the first `m` indices in the standard enumeration.
    #[arg(long)]
    m: Option<usize>,
}

struct Failure {
    code: String,
    message: String,
}

impl Failure {
    fn new(code: &str, message: impl Into<String>) -> Self {
        Failure { code: code.to_string(), message: message.into() }
    }
}

impl From<gwa_kit::Error> for Failure {
    fn from(e: gwa_kit::Error) -> Self {
        Failure::new(e.code(), e.to_string())
    }
}

/// A result in both output formats.
struct Report {
    json: String,
    text: String,
}

fn report<T: Serialize>(value: &T, text: String) -> Result<Report, Failure> {
    let json =
        serde_json::to_string_pretty(value).map_err(|e| Failure::new("serialization", e.to_string()))?;
    Ok(Report { json, text })
}

fn parse_json<T: DeserializeOwned>(what: &str, s: &str) -> Result<T, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::new("malformed_json", format!("{what}: {e}")))
}

fn load_algebra(cli: &Cli) -> Result<Gwa, Failure> {
    let source = match (&cli.spec, &cli.spec_file) {
        (Some(s), None) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::new("io_error", format!("{}: {e}", path.display())))?,
        _ => return Err(Failure::new("usage", "give exactly one of --spec and --spec-file")),
    };
    let spec: GwaSpec = parse_json("spec", &source)?;
    Ok(spec.build(false)?)
}

fn load_sc(a: &Gwa, s: &str) -> Result<StructureConstants, Failure> {
    let p: StructureConstants = parse_json("structure constants", s)?;
    Ok(check_sc(a, &p)?)
}

fn load_window(a: &Gwa, w: &Window) -> Result<Vec<BIndex>, Failure> {
    match (&w.window, w.m) {
        (Some(s), None) => parse_json("window", s),
        (None, Some(m)) => Ok(standard_indices(a, m)),
        _ => Err(Failure::new("usage", "give exactly one of --window and --m")),
    }
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    algebra: &'a Gwa,
    orbits: Vec<Orbit>,
    global_dimension: GlobalDimension,
    simple: bool,
}

#[derive(Serialize)]
struct Flag {
    value: bool,
}

#[derive(Serialize)]
struct Embedding {
    embedding: Poly,
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let a = load_algebra(cli)?;
    match &cli.command {
        Command::Analyze => {
            let r = AnalyzeReport {
                algebra: &a,
                orbits: orbit_decomposition(&a).orbits,
                global_dimension: global_dimension(&a),
                simple: is_simple(&a),
            };
            let text = text::analyze(&a, &r.orbits, r.global_dimension, r.simple);
            report(&r, text)
        }
        Command::Simples => {
            let listing = classify_simples(&a);
            report(&listing, text::simples(&listing))
        }
        Command::Normalize => {
            let n = normalize(&a)?;
            report(&n, text::normalization(&n))
        }
        Command::Morita { beta } => {
            let m = morita_context(&a, beta)?;
            report(&m, text::morita(&m))
        }
        Command::Proj { verb } => run_proj(&a, verb),
        Command::Bring { verb } => run_bring(&a, verb),
    }
}

fn run_proj(a: &Gwa, verb: &ProjVerb) -> Result<Report, Failure> {
    match verb {
        ProjVerb::Validate { sc } => {
            let p = load_sc(a, sc)?;
            report(&p, text::constants(a, &p))
        }
        ProjVerb::Iso { sc, other } => {
            let value = sc_iso(&load_sc(a, sc)?, &load_sc(a, other)?);
            report(&Flag { value }, format!("isomorphic: {value}\n"))
        }
        ProjVerb::Projective { sc } => {
            let value = is_projective_sc(a, &load_sc(a, sc)?);
            report(&Flag { value }, format!("projective: {value}\n"))
        }
        ProjVerb::Profile { sc, from, to } => {
            let window = from.zip(*to);
            let profile = factor_profile(a, &load_sc(a, sc)?, window)?;
            report(&profile, text::profile(&profile))
        }
        ProjVerb::FromProfile { profile } => {
            let profile: FactorProfile = parse_json("profile", profile)?;
            let p = from_profile(a, &profile)?;
            report(&p, text::constants(a, &p))
        }
        ProjVerb::Embed { sc, other } => {
            let embedding = max_embedding(a, &load_sc(a, sc)?, &load_sc(a, other)?)?;
            let text = format!("embedding: {embedding}\n");
            report(&Embedding { embedding }, text)
        }
        ProjVerb::Involute { sc, alpha, j } => {
            let p = involute(a, &load_sc(a, sc)?, alpha, *j)?;
            report(&p, text::constants(a, &p))
        }
        ProjVerb::Coverage { family, from, to, iota } => {
            let raw: Vec<StructureConstants> = parse_json("family", family)?;
            let family = raw.iter().map(|p| Ok(check_sc(a, p)?)).collect::<Result<Vec<_>, Failure>>()?;
            let r = coverage(a, &family, *from, *to, *iota)?;
            report(&r, text::coverage(&r))
        }
    }
}

fn run_bring(a: &Gwa, verb: &BringVerb) -> Result<Report, Failure> {
    match verb {
        BringVerb::Mul { left, right } => {
            let u: BElement = parse_json("left", left)?;
            let v: BElement = parse_json("right", right)?;
            let w = b_mul(a, &u, &v)?;
            report(&w, format!("{w}\n"))
        }
        BringVerb::Present { window } => {
            let p = presentation(a, &load_window(a, window)?)?;
            let text = format!("{}\n", p.text);
            report(&p, text)
        }
        BringVerb::Minprimes { window } => {
            let primes = minimal_primes(a, &load_window(a, window)?)?;
            report(&primes, text::minimal_primes(&primes))
        }
        BringVerb::Chain { m } => {
            let cert = noeth_chain_check(a, *m, oracle_dim_limit())?;
            report(&cert, text::chain(&cert))
        }
        BringVerb::Props { m } => {
            let props = b_props(a, *m)?;
            report(&props, text::props(&props))
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: &'a str,
}

#[derive(Serialize)]
struct ErrorDocument<'a> {
    error: ErrorBody<'a>,
}

/// Writes to stdout, ignoring a closed pipe.
fn write_stdout(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn print_failure(f: &Failure, format: Format) -> ExitCode {
    match format {
        Format::Json => {
            let doc = ErrorDocument { error: ErrorBody { code: &f.code, message: &f.message } };
            write_stdout(&format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("plain strings serialize")
            ));
        }
        Format::Text => eprintln!("error [{}]: {}", f.code, f.message),
    }
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let message = e.kind().as_str().unwrap_or("invalid arguments").to_string();
            let detail = e.to_string();
            let first = detail.lines().next().unwrap_or(&message).trim_start_matches("error: ");
            return print_failure(&Failure::new("usage", first), Format::Json);
        }
    };
    match run(&cli) {
        Ok(r) => {
            match cli.output {
                Format::Json => write_stdout(&format!("{}\n", r.json)),
                Format::Text => write_stdout(&r.text),
            }
            ExitCode::SUCCESS
        }
        Err(f) => print_failure(&f, cli.output),
    }
}
