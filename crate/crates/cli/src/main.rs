use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numrad_core::harness::sampling::{unit_vector, VECTORS_PER_INSTANCE};
use numrad_core::harness::{
    any_failure, replay, reports_to_csv, reports_to_json, resolve_suite, run_suite, tightness_search, SuiteConfig,
    TightenConfig, DEFAULT_TOL,
};
use numrad_core::linalg::parse_matrix;
use numrad_core::radius::fov_boundary;
use numrad_core::registry::{
    evaluate, find_check, list_checks, CheckDef, CheckKind, Evaluation, Expected, OpClass, Params,
};
use numrad_core::{ComplexMatrix, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

const EXIT_FAIL: u8 = 2;
const EXIT_CONFIG: u8 = 3;

#[derive(Parser)]
#[command(name = "numrad", version, about = "Numerical radius toolkit and inequality verification harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the check catalog.
    List {
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Run checks on seeded random operators.
    Run(RunArgs),
    /// Evaluate one check on operators read from files.
    Check {
        id: String,
        /// Matrix file, one per operator slot, in slot order.
        #[arg(long = "matrix", required = true)]
        matrices: Vec<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
        /// Seed for the probe vectors of vector-level checks.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Write field-of-values boundary points as CSV.
    Fov {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 360)]
        points: usize,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for the smallest slack of a check.
    Tighten {
        id: String,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        dims: Vec<usize>,
        /// Restrict every operator slot to one class.
        #[arg(long)]
        class: Option<String>,
        /// Minimize one labelled part instead of the worst part.
        #[arg(long)]
        part: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Re-evaluate the instance behind a sample seed.
    Replay {
        id: String,
        seed: u64,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct ParamArgs {
    /// Parameter values `k=v,...`; `literal=true` evaluates printed forms.
    #[arg(long)]
    params: Option<String>,
    /// Same as `--params literal=true`.
    #[arg(long)]
    literal: bool,
}

impl ParamArgs {
    fn resolve(&self) -> Result<(Params, bool), Error> {
        let mut literal = self.literal;
        let mut rest = Vec::new();
        for item in self.params.as_deref().unwrap_or("").split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item.split_once('=').map(|(k, v)| (k.trim(), v.trim())) {
                Some(("literal", v)) => {
                    literal = v
                        .parse()
                        .map_err(|_| Error::ConfigError(format!("literal must be true or false, got `{v}`")))?;
                }
                _ => rest.push(item),
            }
        }
        Ok((Params::parse(&rest.join(","))?, literal))
    }
}

#[derive(Args)]
struct RunArgs {
    /// `all`, `identities`, or a comma-separated list of ids.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    dims: Vec<usize>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock times in the report.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    params: ParamArgs,
}

fn is_config_error(e: &Error) -> bool {
    matches!(
        e,
        Error::ConfigError(_)
            | Error::UnknownCheck(_)
            | Error::ParamOutOfRange { .. }
            | Error::Parse(_)
            | Error::DimensionMismatch(_)
            | Error::AssumptionViolated(_)
            | Error::BadDim(_)
            | Error::NotSquare { .. }
            | Error::NonFinite { .. }
    )
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::ConfigError(format!("{}: {e}", path.display()))),
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn read_matrix(path: &Path) -> Result<ComplexMatrix, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::ConfigError(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn listing(c: &CheckDef) -> serde_json::Value {
    json!({
        "id": c.id,
        "statement": c.statement,
        "kind": c.kind,
        "assumptions": c.slots,
        "params": c.params,
        "reference": c.reference,
        "expected": c.expected,
        "printedForm": c.literal,
        "notes": c.notes,
    })
}

fn list(format: ListFormat) -> Result<u8, Error> {
    match format {
        ListFormat::Json => {
            let all: Vec<_> = list_checks().iter().map(listing).collect();
            emit(&serde_json::to_string_pretty(&all).expect("listing serializes"), None)?;
        }
        ListFormat::Text => {
            for c in list_checks() {
                let expected = match c.expected {
                    Expected::Pass => "pass",
                    Expected::KnownTypo => "known-typo",
                };
                println!("{:<32} {:<10} {}", c.id, expected, c.statement);
            }
        }
    }
    Ok(0)
}

fn run(args: RunArgs) -> Result<u8, Error> {
    let (params, literal) = args.params.resolve()?;
    let cfg = SuiteConfig {
        checks: resolve_suite(&args.suite)?,
        dims: args.dims,
        samples: args.samples,
        seed: args.seed,
        tol: args.tol,
        workers: args.workers,
        params,
        literal,
        timings: args.timings,
    };
    let reports = run_suite(&cfg)?;
    let text = match args.format {
        ReportFormat::Json => reports_to_json(&reports)?,
        ReportFormat::Csv => reports_to_csv(&reports)?,
    };
    emit(&text, args.out.as_deref())?;
    Ok(if any_failure(&reports) { EXIT_FAIL } else { 0 })
}

fn fails(check: &CheckDef, e: &Evaluation, literal: bool) -> bool {
    check.effective_expected(literal) == Expected::Pass && e.violates(DEFAULT_TOL)
}

fn check(id: &str, matrices: &[PathBuf], params: &ParamArgs, seed: u64) -> Result<u8, Error> {
    let c = find_check(id)?;
    let (params, literal) = params.resolve()?;
    let ops: Vec<ComplexMatrix> = matrices.iter().map(|p| read_matrix(p)).collect::<Result<_, _>>()?;
    let vectors = if c.kind == CheckKind::Operator {
        Vec::new()
    } else {
        let n = ops.first().map_or(0, ComplexMatrix::rows);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..VECTORS_PER_INSTANCE).map(|_| unit_vector(n, &mut rng)).collect()
    };
    let e = evaluate(c, &ops, &params, &vectors, literal)?;
    emit(&serde_json::to_string_pretty(&e).expect("evaluation serializes"), None)?;
    Ok(if fails(c, &e, literal) { EXIT_FAIL } else { 0 })
}

fn fov(matrix: &Path, points: usize, out: Option<&Path>) -> Result<u8, Error> {
    let t = read_matrix(matrix)?;
    let b = fov_boundary(&t, points)?;
    let mut text = String::from("k,theta,re,im\n");
    for (k, (p, th)) in b.points.iter().zip(&b.angles).enumerate() {
        text.push_str(&format!("{k},{th},{},{}\n", p.re, p.im));
    }
    emit(&text, out)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn tighten(
    id: &str,
    restarts: usize,
    steps: usize,
    dims: Vec<usize>,
    class: Option<String>,
    part: Option<String>,
    seed: u64,
    params: &ParamArgs,
) -> Result<u8, Error> {
    let (params, literal) = params.resolve()?;
    let class = class.as_deref().map(OpClass::parse).transpose()?;
    let cfg = TightenConfig { restarts, steps, dims, class, part, params, seed, literal };
    let r = tightness_search(id, &cfg)?;
    emit(&serde_json::to_string_pretty(&r).expect("result serializes"), None)?;
    Ok(0)
}

fn replay_cmd(id: &str, seed: u64, params: &ParamArgs) -> Result<u8, Error> {
    let c = find_check(id)?;
    let (params, literal) = params.resolve()?;
    let e = replay(c, seed, &params, literal)?;
    emit(&serde_json::to_string_pretty(&e).expect("evaluation serializes"), None)?;
    Ok(if fails(c, &e, literal) { EXIT_FAIL } else { 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::List { format } => list(format),
        Command::Run(args) => run(args),
        Command::Check { id, matrices, params, seed } => check(&id, &matrices, &params, seed),
        Command::Fov { matrix, points, out } => fov(&matrix, points, out.as_deref()),
        Command::Tighten { id, restarts, steps, dims, class, part, seed, params } => {
            tighten(&id, restarts, steps, dims, class, part, seed, &params)
        }
        Command::Replay { id, seed, params } => replay_cmd(&id, seed, &params),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_config_error(&e) { EXIT_CONFIG } else { 1 })
        }
    }
}
