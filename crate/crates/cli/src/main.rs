//! Experiment runner: synthetic shift sweeps, temporal-workload sweeps,
//! bound audits, and metric one-shots. Emits one flat CSV schema for all
//! experiment plots.
//!
//! Exit codes: 0 success, 1 usage error, 2 audit failure, 3 data error.

mod audit;
mod csv;
mod download;
mod experiments;
mod pool;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use audit::{run_bound_audit, AuditOptions};
use csv::to_csv;
use distsearch::strategies::LearnedParams;
use distsearch::{Error, ProbDist};
use experiments::{parse_strategies, run_real, run_synth, RealOptions, SynthOptions};

#[derive(Parser)]
#[command(
    name = "distsearch",
    about = "Comparison-counting experiments for sorted-array search with \
             distributional predictions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shift sweep on Gaussian synthetic data; writes CSV.
    Synth {
        /// Comma-separated test-distribution shifts.
        #[arg(long, value_delimiter = ',', default_value = "0,20,40,60,80,100")]
        shifts: Vec<f64>,
        #[arg(long, default_value_t = 5)]
        trials: u32,
        /// Comma list of: classic, bisection, convex, learned, doubling,
        /// portfolio.
        #[arg(long, default_value = "classic,bisection,convex,learned")]
        strategies: String,
        /// Endpoint reach multiplier for the interleaved strategies.
        #[arg(long, default_value_t = 8)]
        growth_factor: u32,
        /// Mixing weight of the convex-combination strategy.
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Parallel experiment cells.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Samples per train/test histogram.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 10.0)]
        sigma: f64,
        /// Integer keyspace as lo:hi (inclusive).
        #[arg(long, default_value = "-100000:100000")]
        keyspace: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Train-fraction sweep on a temporal edge list; writes CSV.
    Real {
        /// Edge-list file of `u v t` lines.
        #[arg(long, conflicts_with_all = ["fixture", "download"])]
        source: Option<PathBuf>,
        /// Committed fixture file (same format as --source).
        #[arg(long, conflicts_with = "download")]
        fixture: Option<PathBuf>,
        /// Dataset name from the manifest; downloads if missing.
        #[arg(long)]
        download: Option<String>,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5"
        )]
        train_fracs: Vec<f64>,
        #[arg(long, default_value = "classic,bisection,convex,learned")]
        strategies: String,
        #[arg(long, default_value_t = 8)]
        growth_factor: u32,
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_entries: usize,
        #[arg(long, default_value_t = 0.10)]
        key_fraction: f64,
        #[arg(long, default_value = "data/snap_datasets.json")]
        manifest: PathBuf,
        /// Directory for downloaded datasets.
        #[arg(long, default_value = "data")]
        data_dir: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Expected-cost bound audits; exits 2 on any violation.
    Audit {
        #[arg(long, default_value_t = 1000)]
        instances: u32,
        #[arg(long, default_value_t = 4096)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        growth_factor: u32,
        #[arg(long, default_value_t = 200)]
        portfolio_instances: u32,
        /// Also write the report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Earth mover's distance between two distribution files
    /// (one probability per line).
    Emd { a: PathBuf, b: PathBuf },
    /// Entropy in bits of a distribution file.
    Entropy { p: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter { .. } => Failure::usage(e.to_string()),
            _ => Failure::data(e.to_string()),
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Synth {
            shifts,
            trials,
            strategies,
            growth_factor,
            lambda,
            seed,
            jobs,
            samples,
            sigma,
            keyspace,
            out,
        } => {
            if trials == 0 {
                return Err(Failure::usage("--trials must be >= 1"));
            }
            let opts = SynthOptions {
                shifts,
                trials,
                strategies: parse_strategies(&strategies, growth_factor, lambda)?,
                seed,
                jobs,
                samples,
                sigma,
                keyspace: parse_keyspace(&keyspace)?,
            };
            let rows = run_synth(&opts)?;
            std::fs::write(&out, to_csv(&rows)).map_err(|e| Failure::data(e.to_string()))?;
            println!("wrote {} rows to {}", rows.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Real {
            source,
            fixture,
            download,
            train_fracs,
            strategies,
            growth_factor,
            lambda,
            jobs,
            max_entries,
            key_fraction,
            manifest,
            data_dir,
            out,
        } => {
            let source = match (source, fixture, download) {
                (Some(path), None, None) | (None, Some(path), None) => path,
                (None, None, Some(name)) => {
                    download::fetch_dataset(&manifest, &name, &data_dir)
                        .map_err(Failure::data)?
                }
                _ => {
                    return Err(Failure::usage(
                        "exactly one of --source, --fixture, --download is required",
                    ))
                }
            };
            let opts = RealOptions {
                source,
                fractions: train_fracs,
                strategies: parse_strategies(&strategies, growth_factor, lambda)?,
                jobs,
                max_entries,
                key_fraction,
            };
            let run = run_real(&opts)?;
            for line in &run.fraction_log {
                println!("{line}");
            }
            std::fs::write(&out, to_csv(&run.rows))
                .map_err(|e| Failure::data(e.to_string()))?;
            println!("wrote {} rows to {}", run.rows.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit {
            instances,
            n_max,
            seed,
            growth_factor,
            portfolio_instances,
            out,
        } => {
            let opts = AuditOptions {
                instances,
                n_max,
                seed,
                params: LearnedParams::new(growth_factor)?,
                portfolio_instances,
            };
            let outcome = run_bound_audit(&opts)?;
            print!("{}", outcome.text);
            if let Some(path) = out {
                std::fs::write(&path, &outcome.text)
                    .map_err(|e| Failure::data(e.to_string()))?;
            }
            if outcome.pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Emd { a, b } => {
            let p = read_distribution(&a)?;
            let q = read_distribution(&b)?;
            let value = distsearch::metrics::emd(&p, &q)?;
            println!("{value:.11e}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Entropy { p } => {
            let p = read_distribution(&p)?;
            println!("{:.11e}", distsearch::metrics::entropy(&p));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_keyspace(raw: &str) -> Result<(i64, i64), Failure> {
    let parts: Vec<&str> = raw.split(':').collect();
    let err = || Failure::usage(format!("--keyspace `{raw}` must be lo:hi"));
    if parts.len() != 2 {
        return Err(err());
    }
    let lo: i64 = parts[0].parse().map_err(|_| err())?;
    let hi: i64 = parts[1].parse().map_err(|_| err())?;
    if lo >= hi {
        return Err(Failure::usage(format!("--keyspace `{raw}`: lo must be < hi")));
    }
    Ok((lo, hi))
}

/// Reads one probability per line; the values must form a distribution.
fn read_distribution(path: &PathBuf) -> Result<ProbDist, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
    let mut mass = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let value: f64 = trimmed.parse().map_err(|_| {
            Failure::data(format!(
                "{}:{}: `{trimmed}` is not a number",
                path.display(),
                lineno + 1
            ))
        })?;
        mass.push(value);
    }
    ProbDist::new(mass).map_err(|e| Failure::data(e.to_string()))
}
