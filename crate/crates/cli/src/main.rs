//! `x3form`: inspect exterior 3-forms, decide 3-regularity and check the
//! Hilbert series and Koszul complex of the associated quadratic algebras.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use x3form_core::report::{self, AnalysisConfig};
use x3form_core::{Error, FormSource};

const SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Parser)]
#[command(name = "x3form", version, about = "Exterior 3-forms as superpotentials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the cataloged forms and parametric families.
    Catalog {
        /// Only entries on K^N.
        #[arg(long)]
        dim: Option<usize>,
        /// Print the listing as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Analyze one form given as a file or `catalog:<name>[:params]`.
    Check {
        source: String,
        #[command(flatten)]
        depth: DepthArgs,
        /// Write the JSON report to PATH, or to stdout when PATH is omitted.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        json: Option<Option<PathBuf>>,
        #[arg(long)]
        skip_hilbert: bool,
        #[arg(long)]
        skip_koszul: bool,
        #[arg(long)]
        skip_lie: bool,
        /// Exit with status 1 when the form is not 3-regular.
        #[arg(long)]
        expect_regular: bool,
    },
    /// Run the whole fixed catalog and print the summary table.
    Reproduce {
        #[command(flatten)]
        depth: DepthArgs,
        /// Also write the full JSON report to PATH.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Also write the summary table to PATH as CSV.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Print the JSON schema of the reports.
    Schema,
}

#[derive(Args)]
struct DepthArgs {
    /// Truncation degree of the Hilbert series (2..=6).
    #[arg(long, default_value_t = x3form_core::algebra::DEFAULT_HILBERT_DEGREE)]
    max_degree: usize,
    /// Highest Koszul-complex slice to check (2..=6).
    #[arg(long, default_value_t = x3form_core::algebra::DEFAULT_KOSZUL_DEGREE)]
    koszul_degree: usize,
    /// Two distinct primes in (2^20, 2^32) for degrees above 4.
    #[arg(long, value_delimiter = ',', num_args = 2, default_values_t = x3form_core::DEFAULT_PRIMES)]
    primes: Vec<u64>,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = x3form_core::random::DEFAULT_SEED)]
    seed: u64,
    /// Record wall-clock time per stage in the JSON report.
    #[arg(long)]
    timings: bool,
}

impl DepthArgs {
    fn config(&self) -> AnalysisConfig {
        AnalysisConfig {
            max_degree: self.max_degree,
            koszul_degree: self.koszul_degree,
            primes: [self.primes[0], self.primes[1]],
            seed: self.seed,
            timings: self.timings,
            ..AnalysisConfig::default()
        }
    }
}

const EXIT_NOT_REGULAR: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_COMPUTATION: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::CertificateMismatch { .. }) => EXIT_COMPUTATION,
        _ => EXIT_INPUT,
    }
}

fn write_csv(path: &Path, rows: &[report::ReproduceRow]) -> anyhow::Result<()> {
    let mut writer = csv::Writer::from_path(path)?;
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Catalog { dim, json } => {
            let listing = report::catalog_listing(dim);
            if json {
                print!("{}", report::to_json(&listing));
            } else {
                print!("{}", render::catalog(&listing));
            }
            Ok(0)
        }
        Command::Check { source, depth, json, skip_hilbert, skip_koszul, skip_lie, expect_regular } => {
            let config = AnalysisConfig { skip_hilbert, skip_koszul, skip_lie, ..depth.config() };
            let loaded = FormSource::parse(&source)?.load().with_context(|| format!("loading {source}"))?;
            let analysis = report::analyze(&loaded, &config)?;
            match json {
                Some(None) => print!("{}", report::to_json(&analysis)),
                Some(Some(path)) => {
                    std::fs::write(&path, report::to_json(&analysis))
                        .with_context(|| format!("writing {}", path.display()))?;
                    print!("{}", render::analysis(&analysis));
                }
                None => print!("{}", render::analysis(&analysis)),
            }
            let failed = expect_regular && !analysis.regularity.three_regular;
            Ok(if failed { EXIT_NOT_REGULAR } else { 0 })
        }
        Command::Reproduce { depth, json, csv } => {
            let result = report::reproduce(&depth.config())?;
            if let Some(path) = json {
                std::fs::write(&path, report::to_json(&result))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = csv {
                write_csv(&path, &result.rows).with_context(|| format!("writing {}", path.display()))?;
            }
            print!("{}", render::reproduce(&result));
            Ok(0)
        }
        Command::Schema => {
            print!("{SCHEMA}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("error")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
