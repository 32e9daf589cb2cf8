//! Command-line front end: batch generation, statistical verification,
//! benchmarks and a fixed demo dataset.
//!
//! Exit codes: 0 success (or all tests passed), 1 test failure or I/O
//! failure, 2 usage error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use simplex_sampling::source::derive_seed;
use simplex_sampling::{
    generate_batch, ks_one_sample, ks_two_sample, marginal_cdf, measure_throughput, moment_check,
    pit_transform, Alpha, BenchReport, EmpiricalSample, MarginalModel, SamplerMethod,
    SimplexPoint,
};

#[derive(Parser)]
#[command(
    name = "simplex",
    version,
    about = "Uniform points on the unit simplex: generate, verify, benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate points and write them as CSV or JSONL
    Sample(SampleArgs),
    /// Run the statistical verification suite against a generator
    Test(TestArgs),
    /// Benchmark generators; writes one CSV row per (method, n)
    Bench(BenchArgs),
    /// Emit the fixed 5000-point dataset on the 2-simplex (n = 3), ready
    /// for ternary scatter plotting
    Fig1b(Fig1bArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// one comma-separated point per row
    Csv,
    /// one JSON array of n numbers per line
    Jsonl,
}

#[derive(Args)]
struct SampleArgs {
    /// Dimension of the points (number of coordinates)
    #[arg(long)]
    n: usize,
    /// Number of points to generate
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Generator: stick|rejection|spacings|exponential|rescaled
    /// (rescaled is a negative control, not uniform)
    #[arg(long, default_value = "stick")]
    method: SamplerMethod,
    /// Use the constant-exponent (step-independent) inverse CDF instead of
    /// the corrected step-dependent one; not uniform for n >= 3
    #[arg(long)]
    paper_literal: bool,
    /// Base seed of the deterministic stream
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Significant digits per coordinate (17 round-trips exactly)
    #[arg(long, default_value_t = 17, value_parser = clap::value_parser!(u32).range(6..=17))]
    precision: u32,
    /// Write a `x1,...,xn` header row (CSV only)
    #[arg(long)]
    header: bool,
    /// Worker threads; output is byte-identical for every value
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
}

#[derive(Args)]
struct TestArgs {
    /// Dimension of the points
    #[arg(long)]
    n: usize,
    /// Generator under test
    #[arg(long, default_value = "stick")]
    method: SamplerMethod,
    /// Test the constant-exponent mode of the stick generator
    #[arg(long)]
    paper_literal: bool,
    /// Points per instrument run (>= 10000 so the moment check applies)
    #[arg(long, default_value_t = 50_000)]
    samples: usize,
    /// Significance level: 0.05 or 0.01
    #[arg(long, default_value = "0.01")]
    alpha: Alpha,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated generators to benchmark
    #[arg(long, value_delimiter = ',', default_value = "stick")]
    methods: Vec<SamplerMethod>,
    /// Comma-separated dimensions
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    /// Points per timed batch; calibrated from n when omitted
    #[arg(long)]
    batch: Option<u64>,
    /// Timing repetitions (median is reported; at least 5 are run)
    #[arg(long, default_value_t = 5)]
    reps: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct Fig1bArgs {
    /// Seed of the dataset; the default is part of the file's contract
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 17, value_parser = clap::value_parser!(u32).range(6..=17))]
    precision: u32,
}

/// Failures that map onto the exit-code contract.
enum Failure {
    /// exit 2
    Usage(String),
    /// exit 1
    Runtime(String),
}

impl From<simplex_sampling::Error> for Failure {
    fn from(err: simplex_sampling::Error) -> Self {
        match err {
            simplex_sampling::Error::RejectionBudgetExhausted { .. } => {
                Failure::Runtime(err.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<simplex_sampling::VerifyError> for Failure {
    fn from(err: simplex_sampling::VerifyError) -> Self {
        Failure::Usage(err.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::Runtime(format!("i/o failure: {err}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Sample(args) => cmd_sample(args),
        Command::Test(args) => cmd_test(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Fig1b(args) => cmd_fig1b(args),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn model_of(paper_literal: bool) -> MarginalModel {
    if paper_literal {
        MarginalModel::PaperLiteral
    } else {
        MarginalModel::Corrected
    }
}

fn require_dimension(n: usize) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::Usage(format!(
            "dimension n = {n} out of range: n must be at least 2"
        )));
    }
    Ok(())
}

/// Format with `sig` significant digits; 17 falls back to the shortest
/// round-trip representation.
fn format_value(v: f64, sig: u32) -> String {
    if sig >= 17 || v == 0.0 {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

fn write_points(
    points: &[SimplexPoint],
    format: Format,
    precision: u32,
    header: bool,
    out: &mut dyn Write,
) -> io::Result<()> {
    if header {
        if let Format::Csv = format {
            let names: Vec<String> = (1..=points.first().map_or(0, SimplexPoint::dim))
                .map(|i| format!("x{i}"))
                .collect();
            writeln!(out, "{}", names.join(","))?;
        }
    }
    for p in points {
        let fields: Vec<String> = p
            .coords()
            .iter()
            .map(|&v| format_value(v, precision))
            .collect();
        match format {
            Format::Csv => writeln!(out, "{}", fields.join(","))?,
            Format::Jsonl => writeln!(out, "[{}]", fields.join(","))?,
        }
    }
    Ok(())
}

fn emit(
    points: &[SimplexPoint],
    out_path: Option<&PathBuf>,
    format: Format,
    precision: u32,
    header: bool,
) -> Result<(), Failure> {
    match out_path {
        Some(path) => {
            let file = File::create(path)?;
            let mut writer = BufWriter::new(file);
            write_points(points, format, precision, header, &mut writer)?;
            writer.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut writer = BufWriter::new(stdout.lock());
            write_points(points, format, precision, header, &mut writer)?;
            writer.flush()?;
        }
    }
    Ok(())
}

fn cmd_sample(args: SampleArgs) -> Result<ExitCode, Failure> {
    require_dimension(args.n)?;
    if args.count < 1 {
        return Err(Failure::Usage("count must be at least 1".into()));
    }
    let points = generate_batch(
        args.method,
        model_of(args.paper_literal),
        args.n,
        args.count,
        args.seed,
        args.jobs as usize,
    )?;
    emit(
        &points,
        args.out.as_ref(),
        args.format,
        args.precision,
        args.header,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_fig1b(args: Fig1bArgs) -> Result<ExitCode, Failure> {
    let points = generate_batch(
        SamplerMethod::StickBreaking,
        MarginalModel::Corrected,
        3,
        5000,
        args.seed,
        1,
    )?;
    emit(&points, args.out.as_ref(), args.format, args.precision, false)?;
    Ok(ExitCode::SUCCESS)
}

/// One named check within the verification suite.
struct Instrument {
    label: &'static str,
    line: String,
    pass: bool,
}

/// The oracle for two-sample comparisons: the exact rejection sampler where
/// its budget allows, the spacings construction beyond that.
fn oracle_method(n: usize) -> SamplerMethod {
    if n <= 6 {
        SamplerMethod::RejectionCube
    } else {
        SamplerMethod::SortedSpacings
    }
}

const COORD_LABELS: [&str; 8] = [
    "x1-vs-oracle",
    "x2-vs-oracle",
    "x3-vs-oracle",
    "x4-vs-oracle",
    "x5-vs-oracle",
    "x6-vs-oracle",
    "x7-vs-oracle",
    "x8-vs-oracle",
];

fn run_suite(args: &TestArgs, rep: u64) -> Result<Vec<Instrument>, Failure> {
    let model = model_of(args.paper_literal);
    let n = args.n;
    let points = generate_batch(
        args.method,
        model,
        n,
        args.samples,
        derive_seed(args.seed, 2 * rep),
        args.jobs as usize,
    )?;
    let oracle = generate_batch(
        oracle_method(n),
        MarginalModel::Corrected,
        n,
        args.samples,
        derive_seed(args.seed, 2 * rep + 1),
        args.jobs as usize,
    )?;

    let mut instruments = Vec::new();

    // coordinate x1 against the analytic marginal CDF
    let x1 = EmpiricalSample::from_coordinate(&points, 0)?;
    let report = ks_one_sample(
        &x1,
        |x| marginal_cdf(MarginalModel::Corrected, n, 1, 1.0, x).unwrap_or(f64::NAN),
        args.alpha,
    )?;
    instruments.push(Instrument {
        label: "x1-vs-analytic",
        line: format!("{:<16} {report}", "x1-vs-analytic"),
        pass: report.pass,
    });

    // per-coordinate agreement with the oracle sampler
    for (coord, &label) in COORD_LABELS.iter().take(n).enumerate() {
        let a = EmpiricalSample::from_coordinate(&points, coord)?;
        let b = EmpiricalSample::from_coordinate(&oracle, coord)?;
        let report = ks_two_sample(&a, &b, args.alpha)?;
        instruments.push(Instrument {
            label,
            line: format!("{label:<16} {report}"),
            pass: report.pass,
        });
    }

    // probability integral transform of the whole batch
    let pit = EmpiricalSample::new(pit_transform(&points, MarginalModel::Corrected)?)?;
    let report = ks_one_sample(&pit, |u| u.clamp(0.0, 1.0), args.alpha)?;
    instruments.push(Instrument {
        label: "pit-uniform",
        line: format!("{:<16} {report}", "pit-uniform"),
        pass: report.pass,
    });

    // moment targets
    let report = moment_check(&points)?;
    instruments.push(Instrument {
        label: "moments",
        line: format!("{:<16} {report}", "moments"),
        pass: report.all_pass(),
    });

    Ok(instruments)
}

/// Statistical tests at small alpha trip occasionally by design; an
/// instrument that fails the first run is re-judged over 20 seeded runs and
/// passes if it fails at most once.
const REPETITIONS: u64 = 20;

fn cmd_test(args: TestArgs) -> Result<ExitCode, Failure> {
    require_dimension(args.n)?;
    let first = run_suite(&args, 0)?;
    for instrument in &first {
        println!("{}", instrument.line);
    }

    let suspects: Vec<&'static str> = first
        .iter()
        .filter(|i| !i.pass)
        .map(|i| i.label)
        .collect();

    let mut all_pass = true;
    if !suspects.is_empty() {
        let mut failures: std::collections::HashMap<&str, u64> =
            suspects.iter().map(|&label| (label, 1)).collect();
        for rep in 1..REPETITIONS {
            for instrument in run_suite(&args, rep)? {
                if let Some(count) = failures.get_mut(instrument.label) {
                    *count += u64::from(!instrument.pass);
                }
            }
        }
        for label in suspects {
            let count = failures[label];
            let pass = count <= 1;
            all_pass &= pass;
            println!(
                "{label:<16} rerun x{REPETITIONS}: {count} failures -> {}",
                if pass { "PASS" } else { "FAIL" }
            );
        }
    }

    if all_pass {
        println!("overall: PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("overall: FAIL");
        Ok(ExitCode::FAILURE)
    }
}

/// Batch sizes that keep timing noise low without dragging the run out.
fn default_batch(method: SamplerMethod, n: usize) -> u64 {
    match method {
        SamplerMethod::RejectionCube => {
            let mut trials: u64 = 1;
            for k in 2..n as u64 {
                trials = trials.saturating_mul(k).min(10_000_000);
            }
            let draws_per_sample = trials.saturating_mul(n as u64 - 1).max(1);
            (2_000_000 / draws_per_sample).clamp(10, 100_000)
        }
        _ => (1_000_000 / n as u64).clamp(200, 100_000),
    }
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, Failure> {
    for &n in &args.n_list {
        require_dimension(n)?;
    }
    println!("{}", BenchReport::CSV_HEADER);
    for &method in &args.methods {
        for &n in &args.n_list {
            let batch = args.batch.unwrap_or_else(|| default_batch(method, n));
            let report = measure_throughput(method, n, batch, args.reps, args.seed)?;
            println!("{}", report.csv_row());
        }
    }
    Ok(ExitCode::SUCCESS)
}
