//! `cbn` — fit, scan, simulate and verify conjunctive Bayesian network
//! models from genotype data.
//!
//! Exit codes: 0 success (and verification PASS), 2 parse/data error,
//! 3 model error or verification FAIL, 4 enumeration cap exceeded.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cbn::io::{
    run_fit, run_scan, run_simulate, run_verify, DataFormat, FitOptions,
    PosetSource, ScanOptions, SimulateOptions, ThetaSpec, VerifyOptions,
};
use cbn::CbnError;

#[derive(Parser)]
#[command(
    name = "cbn",
    version,
    about = "Conjunctive Bayesian networks: order-constrained event models",
    long_about = "Learns the maximum-likelihood event poset and per-event \
probabilities from binary genotype data, scans noise tolerances with a \
mixture model for incompatible observations, simulates data, and verifies \
the model's algebraic invariants exactly."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a model at one error tolerance and report the poset, θ̂ and λ̂
    Fit {
        /// Genotype data file (CSV; see --format)
        data: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// Error tolerance ε in [0,1]: relations violated by at most this
        /// fraction of the data mass are kept
        #[arg(long, default_value_t = 0.0)]
        epsilon: f64,
        /// Merge events the data cannot distinguish instead of failing
        #[arg(long)]
        merge: bool,
        /// Recorded in the report; fitting itself is deterministic
        #[arg(long)]
        seed: Option<u64>,
        /// Write a JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit across a grid of tolerances and compare log-likelihoods
    Scan {
        /// Genotype data file (CSV; see --format)
        data: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// Comma-separated tolerances, or "auto" for every distinct
        /// violation fraction present in the data
        #[arg(long, default_value = "auto")]
        epsilons: String,
        /// Bootstrap replicates per scan point (adds quartile summaries)
        #[arg(long)]
        bootstrap: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Merge events the data cannot distinguish instead of failing
        #[arg(long)]
        merge: bool,
        /// Write a JSON array of per-poset reports here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a two-column CSV (fraction_incompatible, log_lik) here
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write an SVG scatter plot here
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Sample genotype data from a model
    Simulate {
        #[command(flatten)]
        poset: PosetArgs,
        /// Comma-separated event names (default e1..ek)
        #[arg(long, value_delimiter = ',')]
        events: Option<Vec<String>>,
        /// Comma-separated per-event probabilities in [0,1]
        #[arg(long, value_delimiter = ',', required = true)]
        theta: Vec<f64>,
        /// Number of observations to draw
        #[arg(long, default_value_t = 100)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Counts-format CSV destination (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the model's exact identities on a poset
    Verify {
        #[command(flatten)]
        poset: PosetArgs,
        /// Comma-separated event names (default: inferred from the poset
        /// spec, or e1..ek when --theta is a list)
        #[arg(long, value_delimiter = ',')]
        events: Option<Vec<String>>,
        /// "random" or a comma-separated list of probabilities
        #[arg(long, default_value = "random")]
        theta: String,
        /// Random-θ trials to run
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt the tested distributions; the run must then FAIL
        #[arg(long)]
        negative_control: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PosetArgs {
    /// Inline relations, e.g. "K20R<I54V;V82A<I54V"
    #[arg(long)]
    poset: Option<String>,
    /// File with the same syntax (newlines separate relations, # comments)
    #[arg(long)]
    poset_file: Option<PathBuf>,
}

impl From<PosetArgs> for PosetSource {
    fn from(args: PosetArgs) -> Self {
        match (args.poset, args.poset_file) {
            (Some(inline), None) => PosetSource::Inline(inline),
            (None, Some(path)) => PosetSource::File(path),
            _ => unreachable!("clap enforces exactly one source"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Matrix,
    Counts,
}

impl From<FormatArg> for DataFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Auto => DataFormat::Auto,
            FormatArg::Matrix => DataFormat::Matrix,
            FormatArg::Counts => DataFormat::Counts,
        }
    }
}

fn parse_epsilons(raw: &str) -> cbn::Result<Option<Vec<f64>>> {
    if raw.trim().eq_ignore_ascii_case("auto") {
        return Ok(None);
    }
    raw.split(',')
        .map(|s| {
            s.trim().parse::<f64>().map_err(|_| CbnError::Parse {
                line: 0,
                msg: format!("invalid tolerance {:?} in --epsilons", s.trim()),
            })
        })
        .collect::<cbn::Result<Vec<f64>>>()
        .map(Some)
}

fn parse_theta_spec(raw: &str) -> cbn::Result<ThetaSpec> {
    if raw.trim().eq_ignore_ascii_case("random") {
        return Ok(ThetaSpec::Random);
    }
    raw.split(',')
        .map(|s| {
            s.trim().parse::<f64>().map_err(|_| CbnError::Parse {
                line: 0,
                msg: format!("invalid probability {:?} in --theta", s.trim()),
            })
        })
        .collect::<cbn::Result<Vec<f64>>>()
        .map(ThetaSpec::List)
}

fn run(command: Command, w: &mut dyn Write) -> cbn::Result<u8> {
    match command {
        Command::Fit { data, format, epsilon, merge, seed, out } => {
            run_fit(
                &FitOptions { data, format: format.into(), epsilon, merge, seed, out },
                w,
            )?;
            Ok(0)
        }
        Command::Scan {
            data,
            format,
            epsilons,
            bootstrap,
            seed,
            merge,
            out,
            csv,
            plot,
        } => {
            run_scan(
                &ScanOptions {
                    data,
                    format: format.into(),
                    epsilons: parse_epsilons(&epsilons)?,
                    bootstrap,
                    seed,
                    merge,
                    out,
                    csv,
                    plot,
                },
                w,
            )?;
            Ok(0)
        }
        Command::Simulate { poset, events, theta, n, seed, out } => {
            run_simulate(
                &SimulateOptions { poset: poset.into(), events, theta, n, seed, out },
                w,
            )?;
            Ok(0)
        }
        Command::Verify { poset, events, theta, trials, seed, negative_control } => {
            let outcome = run_verify(
                &VerifyOptions {
                    poset: poset.into(),
                    events,
                    theta: parse_theta_spec(&theta)?,
                    trials,
                    seed,
                    negative_control,
                },
                w,
            )?;
            Ok(if outcome.passed { 0 } else { 3 })
        }
    }
}

fn exit_code_for(err: &CbnError) -> u8 {
    match err {
        CbnError::Parse { .. }
        | CbnError::InconsistentWidth { .. }
        | CbnError::EmptyData
        | CbnError::Io(_) => 2,
        CbnError::CapExceeded { .. } => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(cli.command, &mut stdout) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
