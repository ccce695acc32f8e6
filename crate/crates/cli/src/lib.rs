//! Command-line frontend for the a2spider engine.
//!
//! [`run`] does all the work and returns the exit code together with the
//! text that should go to stdout and stderr, so it can be tested in-process.

pub mod dsl;

use std::path::PathBuf;

use a2spider::clasp::{self, ClaspDescriptor};
use a2spider::grothendieck::{self, QIdentity};
use a2spider::report::Report;
use a2spider::suites;
use a2spider::{Morphism, SignSeq, WebDiagram};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use dsl::DslError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

const CACHE_FILE: &str = "clasp_cache.json";

#[derive(Parser, Debug)]
#[command(name = "a2spider", version, about = "Exact computations in the A2 spider")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Highest total degree for the Chebyshev suites.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_degree: usize,
    /// Abort with exit code 3 once a morphism has more terms than this.
    #[arg(long, global = true)]
    pub limit_terms: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a DSL expression to reduced normal form.
    Reduce { expr: String },
    /// Expand a clasp such as P[++-], P[eps=-+] or T[a=-+,b=+-].
    Clasp { descriptor: String },
    /// The Chebyshev polynomial indexed by (k, l).
    Cheb { k: usize, l: usize },
    /// All Chebyshev polynomials of total degree at most N.
    ChebTable { n: usize },
    /// Closure of the clasp on k plus strands followed by l minus strands.
    Trace { k: usize, l: usize },
    /// Run a verification suite.
    Verify {
        suite: String,
        args: Vec<String>,
    },
    /// Check one of the quantum coefficient identities: `edge k` or `interior k l`.
    Qident { which: String, k: usize, l: Option<usize> },
    /// Canonical form and reduction of a web stored as JSON.
    Canon { path: PathBuf },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }

    fn resource(terms: usize, limit: usize) -> Self {
        Outcome { code: EXIT_RESOURCE, stdout: String::new(), stderr: format!("term budget exceeded: {terms} terms, limit {limit}") }
    }
}

fn from_dsl(e: DslError) -> Outcome {
    match e {
        DslError::Resource { terms, limit } => Outcome::resource(terms, limit),
        e => Outcome::usage(e.to_string()),
    }
}

fn from_engine(e: a2spider::Error) -> Outcome {
    match e {
        a2spider::Error::Resource(msg) => Outcome { code: EXIT_RESOURCE, stdout: String::new(), stderr: msg },
        e => Outcome::usage(e.to_string()),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize")
}

fn render_morphism(m: &Morphism, json: bool) -> String {
    if json {
        pretty(&m.to_json_value())
    } else {
        m.to_string()
    }
}

fn render_report(r: &Report, json: bool) -> Outcome {
    let stdout = if json { pretty(&r.to_json_value()) } else { r.to_string() };
    Outcome { code: if r.passed() { EXIT_OK } else { EXIT_FAILED }, stdout, stderr: String::new() }
}

fn check_budget(m: &Morphism, limit: Option<usize>) -> Result<(), Outcome> {
    match limit {
        Some(limit) if m.num_terms() > limit => Err(Outcome::resource(m.num_terms(), limit)),
        _ => Ok(()),
    }
}

fn arg<T: std::str::FromStr>(args: &[String], i: usize, default: Option<T>, what: &str) -> Result<T, Outcome> {
    match args.get(i) {
        Some(a) => a.parse().map_err(|_| Outcome::usage(format!("cannot read {what} from '{a}'"))),
        None => default.ok_or_else(|| Outcome::usage(format!("missing argument: {what}"))),
    }
}

fn verify(suite: &str, args: &[String], cli: &Cli) -> Result<Report, Outcome> {
    let e = from_engine;
    let report = match suite {
        "clasp" => match args.first() {
            Some(w) if w.chars().all(|c| c == '+' || c == '-') => {
                suites::clasp_word_suite(&w.parse::<SignSeq>().map_err(e)?).map_err(e)?
            }
            _ => suites::clasp_suite(arg(args, 0, Some(3), "word length")?).map_err(e)?,
        },
        "ladder" | "kim" => suites::ladder_suite(arg(args, 0, Some(4), "k")?).map_err(e)?,
        "x-vanish" => suites::x_vanish_suite(arg(args, 0, Some(3), "k")?).map_err(e)?,
        "recursion" => suites::recursion_suite().map_err(e)?,
        "reidemeister" => suites::reidemeister_suite().map_err(e)?,
        "slide" => suites::slide_suite(arg(args, 0, Some(1), "delta length")?, arg(args, 1, Some(3), "eps length")?).map_err(e)?,
        "ck1" => suites::ck1_suite().map_err(e)?,
        "ck2" => suites::ck2_suite(arg(args, 0, None, "k")?).map_err(e)?,
        "ck3" => suites::ck3_suite(arg(args, 0, None, "k")?, arg(args, 1, None, "l")?).map_err(e)?,
        "qident" => {
            let which: QIdentity = arg(args, 0, None, "identity name")?;
            suites::qident_suite(which, arg(args, 1, None, "k")?, arg(args, 2, Some(0), "l")?).map_err(e)?
        }
        "trace" => suites::trace_suite(arg(args, 0, Some(3), "strand count")?).map_err(e)?,
        "confluence" => suites::confluence_suite(cli.seed),
        "dim" => grothendieck::cheb_dim_check(arg(args, 0, Some(cli.max_degree), "degree")?),
        "cheb" => suites::chebyshev_suite(arg(args, 0, Some(cli.max_degree), "degree")?),
        other => return Err(Outcome::usage(format!("unknown suite '{other}'"))),
    };
    Ok(report)
}

fn execute(cli: &Cli) -> Result<Outcome, Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Reduce { expr } => {
            let m = dsl::evaluate(expr, cli.limit_terms).map_err(from_dsl)?;
            Ok(Outcome::ok(render_morphism(&m, json)))
        }
        Command::Clasp { descriptor } => {
            let d: ClaspDescriptor = descriptor.parse().map_err(from_engine)?;
            let m = clasp::clasp(&d).map_err(from_engine)?;
            check_budget(&m, cli.limit_terms)?;
            Ok(Outcome::ok(render_morphism(&m, json)))
        }
        Command::Cheb { k, l } => {
            let p = grothendieck::cheb(*k, *l);
            let text = if json { pretty(&json!({"k": k, "l": l, "poly": p.to_json_value()})) } else { p.to_string() };
            Ok(Outcome::ok(text))
        }
        Command::ChebTable { n } => {
            let table = grothendieck::cheb_table(*n);
            let text = if json {
                let rows: Vec<Value> = table.iter().map(|((k, l), p)| json!({"k": k, "l": l, "poly": p.to_json_value()})).collect();
                pretty(&Value::Array(rows))
            } else {
                table.iter().map(|((k, l), p)| format!("C({k},{l}) = {p}\n")).collect()
            };
            Ok(Outcome::ok(text))
        }
        Command::Trace { k, l } => {
            let p = clasp::clasp_for_word(&SignSeq::block(*k, *l)).map_err(from_engine)?;
            check_budget(&p, cli.limit_terms)?;
            let t = p.closure_trace().map_err(from_engine)?;
            let text = if json { pretty(&json!({"k": k, "l": l, "trace": t.to_string()})) } else { t.to_string() };
            Ok(Outcome::ok(text))
        }
        Command::Verify { suite, args } => Ok(render_report(&verify(suite, args, cli)?, json)),
        Command::Qident { which, k, l } => {
            let which: QIdentity = which.parse().map_err(from_engine)?;
            let rec = grothendieck::q_identity_report(which, *k, l.unwrap_or(0)).map_err(from_engine)?;
            if json {
                let code = if rec.holds() { EXIT_OK } else { EXIT_FAILED };
                Ok(Outcome { code, stdout: pretty(&rec.to_json_value()), stderr: String::new() })
            } else {
                Ok(render_report(&rec.report(), false))
            }
        }
        Command::Canon { path } => {
            let text = std::fs::read_to_string(path).map_err(|err| Outcome::usage(format!("{}: {err}", path.display())))?;
            let web = WebDiagram::from_json(&text).map_err(from_engine)?;
            let (key, canon) = web.canonicalize();
            let reduced = Morphism::reduce(&canon, a2spider::RingScalar::one());
            check_budget(&reduced, cli.limit_terms)?;
            let key_hex: String = key.to_bytes().iter().map(|b| format!("{b:02x}")).collect();
            let out = if json {
                pretty(&json!({"key": key_hex, "web": canon.to_json_value(), "reduced": reduced.to_json_value()}))
            } else {
                format!("key {key_hex}\nbasis web: {}\n{}", canon.is_basis_web(), reduced)
            };
            Ok(Outcome::ok(out))
        }
    }
}

fn cache_path() -> Option<PathBuf> {
    std::env::var_os("A2SPIDER_CACHE_DIR").map(|d| PathBuf::from(d).join(CACHE_FILE))
}

fn load_cache(path: &PathBuf) -> Result<(), String> {
    match std::fs::read_to_string(path) {
        Ok(text) => {
            let v: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            clasp::import_cache(&v).map(|_| ()).map_err(|e| format!("{}: {e}", path.display()))
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(()),
        Err(e) => Err(format!("{}: {e}", path.display())),
    }
}

fn save_cache(path: &PathBuf) -> Result<(), String> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, serde_json::to_string(&clasp::export_cache()).expect("cache serializes"))
        .and_then(|_| std::fs::rename(&tmp, path))
        .map_err(|e| format!("{}: {e}", path.display()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::usage(text) };
        }
    };
    let cache = cache_path();
    let mut warnings = String::new();
    if let Some(path) = &cache {
        if let Err(msg) = load_cache(path) {
            warnings.push_str(&format!("warning: ignoring clasp cache: {msg}\n"));
        }
    }
    let mut out = execute(&cli).unwrap_or_else(|o| o);
    if let Some(path) = &cache {
        if let Err(msg) = save_cache(path) {
            warnings.push_str(&format!("warning: could not write clasp cache: {msg}\n"));
        }
    }
    out.stderr.insert_str(0, &warnings);
    out
}
