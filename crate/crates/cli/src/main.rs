use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use vsecant::secant::{di_ideal_generator_profile, ordinary_generator_profile, SecantIdeals};
use vsecant::verify::{run_all, SuiteReport, VerifyConfig};
use vsecant::{GradedRing, RingSpec};

const MAX_VARS: usize = 3;
const MAX_D: u32 = 5;
const MAX_N: usize = 4;
const MAX_R: usize = 3;

#[derive(Parser)]
#[command(
    name = "vsecant",
    version,
    about = "Secant ideals of Veronese embeddings, computed exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of secant ideal pieces per (d, n).
    Dims(DimsArgs),
    /// New generators per (d, n) of a secant ideal.
    Profile(ProfileArgs),
    /// Run the randomized identity suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RingArgs {
    /// JSON ring spec: {"vars": 3, "relations": ["x0*x2 - x1^2"]}.
    #[arg(long, conflicts_with = "vars")]
    ring: Option<PathBuf>,
    /// Polynomial ring in this many variables.
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Args)]
struct Common {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Lift the default size limits.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct DimsArgs {
    #[command(flatten)]
    common: Common,
    /// Secant order.
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, conflicts_with = "d_max", required_unless_present = "d_max")]
    d: Option<u32>,
    #[arg(long)]
    d_max: Option<u32>,
    #[arg(long)]
    n_max: usize,
}

#[derive(Args)]
struct ProfileArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Mode::Ordinary)]
    mode: Mode,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, conflicts_with = "d_max", required_unless_present = "d_max")]
    d: Option<u32>,
    #[arg(long)]
    d_max: Option<u32>,
    #[arg(long)]
    n_max: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 3)]
    d_max: u32,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Ordinary,
    Di,
}

enum Failure {
    Input(String),
    Limit(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Input(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Limit(msg) => {
                eprintln!("error: {msg} (use --force to override)");
                ExitCode::from(3)
            }
        }
    }
}

#[derive(Serialize)]
struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    mode: Option<Mode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_max: Option<u32>,
    n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trials: Option<usize>,
}

#[derive(Serialize)]
struct Row {
    d: u32,
    n: usize,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    new: Option<usize>,
}

#[derive(Serialize)]
struct Output<R, S> {
    ring: RingSpec,
    command: &'static str,
    params: Params,
    rows: Vec<R>,
    summary: S,
}

#[derive(Serialize)]
struct DimsSummary {
    nonzero: usize,
    total_dim: usize,
}

#[derive(Serialize)]
struct ProfileSummary {
    max_new_n: usize,
}

#[derive(Serialize)]
struct VerifySummary {
    passed: bool,
    checks: usize,
    failures: usize,
}

fn load_ring(args: &RingArgs) -> Result<GradedRing, Failure> {
    let ring = match (&args.ring, args.vars) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            GradedRing::from_json(&text)
        }
        (None, Some(v)) => Ok(GradedRing::free(v)),
        (None, None) => return Err(Failure::Input("one of --ring or --vars is required".into())),
    };
    let ring = ring.map_err(|e| Failure::Input(e.to_string()))?;
    if ring.nvars() == 0 {
        return Err(Failure::Input(
            "the ring needs at least one variable".into(),
        ));
    }
    Ok(ring)
}

fn check_limits(force: bool, vars: usize, r: usize, d: u32, n: usize) -> Result<(), Failure> {
    if r == 0 || d == 0 || n == 0 {
        return Err(Failure::Input(
            "--r, --d/--d-max and --n-max must be positive".into(),
        ));
    }
    if force {
        return Ok(());
    }
    let over = [
        (vars > MAX_VARS, format!("vars {vars} > {MAX_VARS}")),
        (r > MAX_R, format!("r {r} > {MAX_R}")),
        (d > MAX_D, format!("d {d} > {MAX_D}")),
        (n > MAX_N, format!("n {n} > {MAX_N}")),
    ];
    match over.into_iter().find(|(bad, _)| *bad) {
        Some((_, msg)) => Err(Failure::Limit(format!("limit exceeded: {msg}"))),
        None => Ok(()),
    }
}

fn degrees(d: Option<u32>, d_max: Option<u32>) -> (Vec<u32>, u32) {
    match (d, d_max) {
        (Some(d), _) => (vec![d], d),
        (None, Some(m)) => ((1..=m).collect(), m),
        (None, None) => unreachable!("clap requires one of --d and --d-max"),
    }
}

fn emit<R: Serialize, S: Serialize>(format: Format, out: &Output<R, S>) -> Result<(), Failure> {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(out)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            out.rows
                .iter()
                .try_for_each(|r| w.serialize(r))
                .map_err(|e| e.to_string())
                .and_then(|_| w.into_inner().map_err(|e| e.to_string()))
                .map(|bytes| String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    };
    let text = text.map_err(Failure::Input)?;
    print!("{text}");
    Ok(())
}

fn dims(args: DimsArgs) -> Result<ExitCode, Failure> {
    let ring = load_ring(&args.common.ring)?;
    let (ds, top) = degrees(args.d, args.d_max);
    check_limits(args.common.force, ring.nvars(), args.r, top, args.n_max)?;
    let spec = ring.spec();
    let ideals = SecantIdeals::new(Arc::new(ring));
    let ideal = ideals.ideal(args.r);
    let rows: Vec<Row> = ds
        .iter()
        .flat_map(|&d| (1..=args.n_max).map(move |n| (d, n)))
        .map(|(d, n)| Row {
            d,
            n,
            dim: ideal.piece(d, n).dim(),
            generated: None,
            new: None,
        })
        .collect();
    let summary = DimsSummary {
        nonzero: rows.iter().filter(|r| r.dim > 0).count(),
        total_dim: rows.iter().map(|r| r.dim).sum(),
    };
    let params = Params {
        mode: None,
        r: Some(args.r),
        d: args.d,
        d_max: args.d_max,
        n_max: args.n_max,
        seed: None,
        trials: None,
    };
    emit(
        args.common.format,
        &Output {
            ring: spec,
            command: "dims",
            params,
            rows,
            summary,
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

fn profile(args: ProfileArgs) -> Result<ExitCode, Failure> {
    let ring = load_ring(&args.common.ring)?;
    let (ds, top) = degrees(args.d, args.d_max);
    check_limits(args.common.force, ring.nvars(), args.r, top, args.n_max)?;
    let spec = ring.spec();
    let ideals = SecantIdeals::new(Arc::new(ring));
    let ideal = ideals.ideal(args.r);
    let profile_rows = match args.mode {
        Mode::Ordinary => ds
            .iter()
            .flat_map(|&d| ordinary_generator_profile(&ideal, d, args.n_max).rows)
            .collect(),
        Mode::Di => {
            let all = di_ideal_generator_profile(&ideal, top, args.n_max).rows;
            all.into_iter()
                .filter(|r| ds.contains(&r.d))
                .collect::<Vec<_>>()
        }
    };
    let rows: Vec<Row> = profile_rows
        .iter()
        .map(|r| Row {
            d: r.d,
            n: r.n,
            dim: r.dim,
            generated: Some(r.generated),
            new: Some(r.new),
        })
        .collect();
    let summary = ProfileSummary {
        max_new_n: profile_rows
            .iter()
            .filter(|r| r.new > 0)
            .map(|r| r.n)
            .max()
            .unwrap_or(0),
    };
    let params = Params {
        mode: Some(args.mode),
        r: Some(args.r),
        d: args.d,
        d_max: args.d_max,
        n_max: args.n_max,
        seed: None,
        trials: None,
    };
    emit(
        args.common.format,
        &Output {
            ring: spec,
            command: "profile",
            params,
            rows,
            summary,
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let ring = match (&args.common.ring.ring, args.common.ring.vars) {
        (None, None) => GradedRing::free(2),
        _ => load_ring(&args.common.ring)?,
    };
    check_limits(args.common.force, ring.nvars(), 1, args.d_max, args.n_max)?;
    let spec = ring.spec();
    let mut config = VerifyConfig::new(Arc::new(ring), args.seed, args.trials);
    config.d_max = args.d_max;
    config.n_max = args.n_max;
    let rows: Vec<SuiteReport> = run_all(&config);
    let summary = VerifySummary {
        passed: rows.iter().all(SuiteReport::passed),
        checks: rows.iter().map(|r| r.checks).sum(),
        failures: rows.iter().map(|r| r.failures).sum(),
    };
    let passed = summary.passed;
    let params = Params {
        mode: None,
        r: None,
        d: None,
        d_max: Some(args.d_max),
        n_max: args.n_max,
        seed: Some(args.seed),
        trials: Some(args.trials),
    };
    emit(
        args.common.format,
        &Output {
            ring: spec,
            command: "verify",
            params,
            rows,
            summary,
        },
    )?;
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let result = match Cli::parse().command {
        Command::Dims(a) => dims(a),
        Command::Profile(a) => profile(a),
        Command::Verify(a) => verify(a),
    };
    result.unwrap_or_else(Failure::exit)
}
