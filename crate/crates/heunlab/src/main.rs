use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use heunlab::cli::{export_csv, fit_relations, run, Config, Suite};

/// Exit codes: 0 all checks passed, 1 structural or oracle failure,
/// 3 only stated-form claim failures, 4 configuration or usage error.
const EXIT_HARD: u8 = 1;
const EXIT_CLAIM: u8 = 3;
const EXIT_USAGE: u8 = 4;

#[derive(Parser)]
#[command(name = "heunlab", about = "Exact verification workbench for the Racah, Bannai-Ito and Heun algebra families", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print the JSON report.
    Verify {
        /// racah, heun-racah, bannai-ito, heun-bi, upsilon, or all
        suite: String,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Number of seeded random trials (overrides the config).
        #[arg(long)]
        trials: Option<usize>,
        /// Sampler seed (overrides the config).
        #[arg(long)]
        seed: Option<u64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export one operator matrix as exact CSV.
    Export {
        #[arg(long)]
        operator: String,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Fit the scalar constants of a relation file on the configured
    /// realization.
    Fit {
        #[arg(long)]
        relations: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Run the exact coefficient solve for the Upsilon expansion.
    UpsilonFit {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_config(path: &Option<PathBuf>) -> Result<Config, String> {
    match path {
        Some(p) => Config::from_file(p).map_err(|e| format!("{}: {e}", p.display())),
        None => Ok(Config::default()),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify {
            suite,
            config,
            trials,
            seed,
            out,
        } => {
            let mut cfg = load_config(&config)?;
            if let Some(t) = trials {
                cfg.sampling.trials = t;
            }
            if let Some(s) = seed {
                cfg.sampling.seed = s;
            }
            let suites: Vec<Suite> = if suite == "all" {
                cfg.suites.clone()
            } else {
                vec![Suite::from_name(&suite).ok_or_else(|| {
                    format!(
                        "unknown suite {suite:?}; expected one of racah, heun-racah, \
                         bannai-ito, heun-bi, upsilon, all"
                    )
                })?]
            };
            let report = run(&cfg, &suites).map_err(|e| e.to_string())?;
            emit(&report.to_json(), &out)?;
            Ok(if report.has_hard_failure() {
                ExitCode::from(EXIT_HARD)
            } else if report.has_claim_failure() {
                ExitCode::from(EXIT_CLAIM)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Export {
            operator,
            config,
            out,
        } => {
            let cfg = load_config(&config)?;
            let csv = export_csv(&cfg, &operator).map_err(|e| e.to_string())?;
            std::fs::write(&out, csv).map_err(|e| format!("{}: {e}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fit { relations, config } => {
            let cfg = load_config(&config)?;
            let source = std::fs::read_to_string(&relations)
                .map_err(|e| format!("{}: {e}", relations.display()))?;
            let value = fit_relations(&cfg, &source).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&value).expect("serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::UpsilonFit { config, out } => {
            let cfg = load_config(&config)?;
            let report = run(&cfg, &[Suite::Upsilon]).map_err(|e| e.to_string())?;
            emit(&report.to_json(), &out)?;
            Ok(if report.has_hard_failure() {
                ExitCode::from(EXIT_HARD)
            } else if report.has_claim_failure() {
                ExitCode::from(EXIT_CLAIM)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}
