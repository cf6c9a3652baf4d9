use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pcseg::synth::gen_signal;
use pcseg::{io, Algorithm, Backend};
use pcseg_cli::{
    bench, format_tsv, ladder, run, selftest, BenchSpec, CliError, GenSpec, RunSpec, Source,
};

/// Optimal piecewise-constant segmentation under a per-segment penalty.
#[derive(Parser)]
#[command(name = "pcseg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Segment a signal and write a JSON report.
    Fit(FitArgs),
    /// Write a synthetic step signal.
    Gen(GenArgs),
    /// Time every solver over a doubling size ladder (TSV).
    Bench(BenchArgs),
    /// Cross-check all solvers against each other on random inputs.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct FitArgs {
    /// Signal file, one value per line.
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    input: Option<PathBuf>,
    /// Generated input, e.g. "segments=4,length=1000,jump=5,noise=1".
    #[arg(long)]
    gen: Option<GenSpec>,
    #[arg(long, default_value = "exact")]
    algo: Algorithm,
    /// Per-segment penalty C.
    #[arg(long)]
    penalty: f64,
    /// Approximation tolerance; required for monge and halfspace.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Generator seed, unless the --gen string sets one.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "linear")]
    backend: Backend,
    /// Report path; stdout if absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    segments: usize,
    #[arg(long)]
    length: usize,
    #[arg(long, default_value_t = 5.0)]
    jump: f64,
    #[arg(long, default_value_t = 1.0)]
    noise: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Signal path; stdout if absent.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Where to write the true boundaries and levels (JSON); stderr if absent.
    #[arg(long)]
    truth: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 256)]
    min_n: usize,
    #[arg(long, default_value_t = 4096)]
    max_n: usize,
    /// Comma-separated solvers.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "exact,exact-pruned,monge,halfspace"
    )]
    algos: Vec<Algorithm>,
    #[arg(long, default_value_t = 1.0)]
    penalty: f64,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long, default_value = "linear")]
    backend: Backend,
    /// Largest n at which the exact reference is computed.
    #[arg(long, default_value_t = 1 << 15)]
    exact_max: usize,
    #[arg(long, default_value_t = 1)]
    runs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Output {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Output {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn fit(args: FitArgs) -> Result<(), CliError> {
    let source = match (args.input, args.gen) {
        (Some(path), _) => Source::File(path),
        (None, Some(g)) => Source::Gen(g),
        (None, None) => unreachable!("clap requires one input source"),
    };
    let spec = RunSpec {
        source,
        algorithm: args.algo,
        backend: args.backend,
        penalty: args.penalty,
        epsilon: args.epsilon,
        seed: args.seed,
        output: args.output,
    };
    let report = run(&spec)?;
    emit(spec.output.as_ref(), &(report.to_json() + "\n"))
}

fn gen(args: GenArgs) -> Result<(), CliError> {
    let spec = GenSpec {
        segments: args.segments,
        length: args.length,
        jump: args.jump,
        noise: args.noise,
        seed: Some(args.seed),
    }
    .to_step_spec(args.seed);
    let g = gen_signal::<f64>(&spec)?;
    emit(args.output.as_ref(), &io::format_signal(&g.signal))?;
    let truth = serde_json::json!({ "boundaries": g.boundaries, "levels": g.levels });
    match args.truth {
        Some(p) => emit(Some(&p), &(truth.to_string() + "\n")),
        None => {
            eprintln!("{truth}");
            Ok(())
        }
    }
}

fn run_bench(args: BenchArgs) -> Result<(), CliError> {
    let spec = BenchSpec {
        sizes: ladder(args.min_n, args.max_n),
        algorithms: args.algos,
        backend: args.backend,
        penalty: args.penalty,
        epsilon: args.epsilon,
        exact_max: args.exact_max,
        runs: args.runs,
        seed: args.seed,
    };
    let rows = bench(&spec)?;
    emit(args.output.as_ref(), &format_tsv(&rows))
}

fn main() -> ExitCode {
    // usage mistakes are configuration errors (exit 3), not input errors
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(3);
        }
    };
    let outcome = match cli.command {
        Command::Fit(a) => fit(a),
        Command::Gen(a) => gen(a),
        Command::Bench(a) => run_bench(a),
        Command::Selftest { seed } => {
            let checks = selftest(seed);
            for c in &checks {
                println!(
                    "{}  {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            return if checks.iter().all(|c| c.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            };
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pcseg: {e}");
            println!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
