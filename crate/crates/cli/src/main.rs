//! `jlimits`: classify limit sets of vectors under Jordan-form matrices,
//! build witness sequences and run the numerical oracle.
//!
//! Every subcommand reads one JSON document, prints a JSON report to stdout
//! and writes CSV artifacts under `--out`.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jordan_limits::classify::{classify, describe, Exactness, LimitSetKind, SymbolicLimitSet};
use jordan_limits::exact::ModulusClass;
use jordan_limits::io::InputDocument;
use jordan_limits::jordan::ExactVector;
use jordan_limits::oracle::{ball_transitivity_check, dset_coverage, forward_orbit, pullback_scan, OracleConfig, OracleReport};
use jordan_limits::selftest::{has_odd_unit_block, run_selftest, SelftestConfig};
use jordan_limits::witness::{assemble_witness, verify_witness_with_ceiling, DEFAULT_PRECISION_CEILING};
use jordan_limits::Error;

#[derive(Parser)]
#[command(name = "jlimits", version, about = "Limit sets and extended limit sets of Jordan-form matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify L(x), J(x) or Jmix(0) symbolically.
    Classify(ClassifyArgs),
    /// Build and verify a witness sequence for a target in J(x).
    Witness(WitnessArgs),
    /// Floating-point evidence independent of the classifier.
    Oracle(OracleArgs),
    /// Run the bundled invariant checks.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct InputArgs {
    /// JSON input document; `-` or nothing reads stdin.
    input: Option<PathBuf>,
    /// Start vector as a JSON array, overriding the document.
    #[arg(long)]
    vector: Option<String>,
    /// Target vector as a JSON array, overriding the document.
    #[arg(long)]
    target: Option<String>,
    /// Directory for CSV artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    io: InputArgs,
    #[arg(long = "set", default_value = "J")]
    which: LimitSetKind,
    /// Exit with status 2 when the answer is an outer approximation.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[command(flatten)]
    io: InputArgs,
    #[arg(long, default_value_t = 10_000)]
    steps: u64,
    #[arg(long, default_value_t = 1e-3)]
    tol: f64,
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Scan,
    Orbit,
    Coverage,
    Ball,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    io: InputArgs,
    #[arg(long, value_enum, default_value = "scan")]
    mode: Mode,
    #[arg(long, default_value_t = 10_000)]
    max_iter: u64,
    #[arg(long, default_value_t = 64)]
    precision_bits: usize,
    #[arg(long, default_value_t = 1e-3)]
    tol: f64,
    /// Radius around the start vector for `--mode ball`.
    #[arg(long, default_value_t = 1e-2)]
    delta: f64,
    /// Radius around the target for `--mode ball`.
    #[arg(long, default_value_t = 1e-2)]
    epsilon: f64,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 2024)]
    seed: u64,
}

enum Failure {
    Invalid(String),
    Strict(Value),
    Selftest(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn read_document(args: &InputArgs) -> Result<InputDocument, Failure> {
    let text = match &args.input {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::Invalid(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Invalid(e.to_string()))?;
            s
        }
    };
    let mut doc = InputDocument::from_json(&text)?;
    let parse = |s: &str| -> Result<ExactVector, Failure> {
        let v: ExactVector = serde_json::from_str(s).map_err(|e| Failure::Invalid(format!("vector {s:?}: {e}")))?;
        doc.spec.check_vector(&v)?;
        Ok(v)
    };
    let vector = args.vector.as_deref().map(parse).transpose()?;
    let target = args.target.as_deref().map(parse).transpose()?;
    doc.vector = vector.or(doc.vector);
    doc.target = target.or(doc.target);
    Ok(doc)
}

fn require_target(doc: &InputDocument) -> Result<ExactVector, Failure> {
    doc.target.clone().ok_or_else(|| Failure::Invalid("a target vector is required (document \"target\" or --target)".into()))
}

fn write_artifact(out: &Option<PathBuf>, name: &str, write: impl FnOnce(&mut Vec<u8>) -> std::io::Result<()>) -> Result<Option<String>, Failure> {
    let Some(dir) = out else { return Ok(None) };
    fs::create_dir_all(dir).map_err(|e| Failure::Invalid(format!("{}: {e}", dir.display())))?;
    let mut buf = Vec::new();
    write(&mut buf).map_err(|e| Failure::Invalid(e.to_string()))?;
    let path: PathBuf = Path::new(dir).join(name);
    fs::write(&path, buf).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    Ok(Some(path.display().to_string()))
}

fn set_warnings(set: &SymbolicLimitSet) -> Vec<String> {
    let Some(p) = set.as_product() else { return Vec::new() };
    p.groups
        .iter()
        .flat_map(|g| {
            g.undecided_pairs().into_iter().map(|(a, b)| {
                format!("outer approximation: the joint closure of eigenvalues {a} and {b} is undecided, the reported set may be too large")
            })
        })
        .collect()
}

fn spec_notes(doc: &InputDocument) -> Vec<String> {
    if has_odd_unit_block(&doc.spec) {
        vec!["odd unit-modulus block of size 2r-1: J keeps r-1 free coordinates, the r-th is a rotation coordinate, not a free one".into()]
    } else {
        Vec::new()
    }
}

fn cmd_classify(args: &ClassifyArgs) -> Outcome {
    let doc = read_document(&args.io)?;
    let x = doc.vector_or_zero();
    let set = classify(&doc.spec, &x, args.which)?;
    let mut warnings = set_warnings(&set);
    warnings.extend(spec_notes(&doc));
    let report = json!({
        "operation": "classify",
        "input": doc.echo(),
        "set": args.which.to_string(),
        "result": set,
        "description": describe(&set),
        "warnings": warnings,
    });
    if args.strict && set.exactness() == Exactness::OuterApprox {
        return Err(Failure::Strict(report));
    }
    Ok(report)
}

fn cmd_witness(args: &WitnessArgs) -> Outcome {
    let doc = read_document(&args.io)?;
    let x = doc.vector_or_zero();
    let y = require_target(&doc)?;
    let set = classify(&doc.spec, &x, LimitSetKind::J)?;
    if args.strict && set.exactness() == Exactness::OuterApprox {
        return Err(Failure::Strict(json!({"operation": "witness", "input": doc.echo(), "warnings": set_warnings(&set)})));
    }
    let w = assemble_witness(&doc.spec, &x, &y, args.steps)?;
    let verdict = verify_witness_with_ceiling(&w, args.steps, args.tol, DEFAULT_PRECISION_CEILING)?;
    let csv = write_artifact(&args.io.out, "witness.csv", |buf| {
        w.write_csv(1, args.steps, args.tol, buf).map_err(|e| std::io::Error::other(e.to_string()))
    })?;
    let mut warnings = set_warnings(&set);
    warnings.extend(spec_notes(&doc));
    Ok(json!({
        "operation": "witness",
        "input": doc.echo(),
        "witness": w.header_json(),
        "verification": verdict,
        "artifacts": csv,
        "warnings": warnings,
    }))
}

fn oracle_json(report: &OracleReport) -> Value {
    serde_json::to_value(report).expect("oracle report serializes")
}

fn cmd_oracle(args: &OracleArgs) -> Outcome {
    let doc = read_document(&args.io)?;
    let x = doc.vector_or_zero();
    let cfg = OracleConfig {
        max_iterations: args.max_iter,
        precision_bits: args.precision_bits,
        tolerance: args.tol,
        ..OracleConfig::default()
    };
    let (reports, csv): (Vec<OracleReport>, Option<String>) = match args.mode {
        Mode::Scan => {
            let r = pullback_scan(&doc.spec, &x, &require_target(&doc)?, &cfg)?;
            let csv = write_artifact(&args.io.out, "scan.csv", |b| r.write_curve_csv(b))?;
            (vec![r], csv)
        }
        Mode::Orbit => {
            let set = classify(&doc.spec, &x, LimitSetKind::L)?;
            let r = forward_orbit(&doc.spec, &x, &cfg, Some(&set))?;
            let csv = write_artifact(&args.io.out, "orbit.csv", |b| r.write_curve_csv(b))?;
            (vec![r], csv)
        }
        Mode::Coverage => {
            let mut seen = Vec::new();
            for b in doc.spec.blocks() {
                if b.modulus_class() == ModulusClass::EqualOne && !seen.contains(&b.lambda) {
                    seen.push(b.lambda.clone());
                }
            }
            if seen.is_empty() {
                return Err(Failure::Invalid("coverage needs a block with a unit-modulus eigenvalue".into()));
            }
            let reports = seen.iter().map(|l| dset_coverage(l, &cfg)).collect::<Result<Vec<_>, _>>()?;
            (reports, None)
        }
        Mode::Ball => {
            let r = ball_transitivity_check(&doc.spec, &x, &require_target(&doc)?, args.delta, args.epsilon, &cfg)?;
            (vec![r], None)
        }
    };
    Ok(json!({
        "operation": "oracle",
        "input": doc.echo(),
        "config": cfg,
        "reports": reports.iter().map(oracle_json).collect::<Vec<_>>(),
        "artifacts": csv,
        "warnings": spec_notes(&doc),
    }))
}

fn cmd_selftest(args: &SelftestArgs) -> Outcome {
    let report = run_selftest(&SelftestConfig { seed: args.seed, ..SelftestConfig::default() });
    let value = json!({"operation": "selftest", "report": report});
    if report.passed {
        Ok(value)
    } else {
        Err(Failure::Selftest(value))
    }
}

fn print(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("report serializes");
    // A closed pipe downstream is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Witness(a) => cmd_witness(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Selftest(a) => cmd_selftest(a),
    };
    match outcome {
        Ok(v) => {
            print(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("jlimits: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Strict(v)) => {
            print(&v);
            eprintln!("jlimits: result is an outer approximation (--strict)");
            ExitCode::from(2)
        }
        Err(Failure::Selftest(v)) => {
            print(&v);
            eprintln!("jlimits: selftest failed");
            ExitCode::from(3)
        }
    }
}
