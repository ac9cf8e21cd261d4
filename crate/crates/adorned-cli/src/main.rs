//! Thin argument shell over the command library.

use adorned_cli::{config, CliError, OracleSettings, Outputs, Session};
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "adorned", about = "Adorned combinatorial games", version)]
struct Cli {
    /// Universe to evaluate in (defaults to config, then "normal").
    #[arg(long, global = true)]
    universe: Option<String>,

    /// Emit the result as a single JSON document.
    #[arg(long, global = true)]
    json: bool,

    /// Render games with unicode brackets and atoms.
    #[arg(long, global = true)]
    unicode: bool,

    /// Optional key=value config file supplying defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a game's outcome pair.
    Outcome { game: String },
    /// Compare two games: >=, <=, =, or ||.
    Compare { lhs: String, rhs: String },
    /// Run validation sweeps over a seeded pool.
    Oracle {
        /// Largest game rank in the pool.
        #[arg(long)]
        max_rank: Option<u32>,
        /// Seed for pool sampling.
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated adorns for scoring pools, e.g. "-1,0,1/2".
        #[arg(long)]
        adorns: Option<String>,
        /// Write all sweep records to this file, one JSON object per line.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run the built-in regression examples.
    Selftest,
}

fn run(cli: &Cli) -> Result<Outputs, CliError> {
    let config = match &cli.config {
        Some(path) => config::load(path)?,
        None => config::Config::default(),
    };
    let universe = cli
        .universe
        .clone()
        .or_else(|| config.universe.clone())
        .unwrap_or_else(|| "normal".to_string());
    let mut session = Session::new();
    match &cli.command {
        Command::Outcome { game } => {
            adorned_cli::run_outcome(&mut session, game, &universe, cli.unicode)
        }
        Command::Compare { lhs, rhs } => {
            adorned_cli::run_compare(&mut session, lhs, rhs, &universe, cli.unicode)
        }
        Command::Oracle {
            max_rank,
            seed,
            adorns,
            report,
        } => {
            let defaults = OracleSettings::default();
            let adorns = match adorns {
                Some(text) => Some(config::parse_adorn_list(text)?),
                None => config.adorns.clone(),
            };
            let settings = OracleSettings {
                max_rank: max_rank.or(config.max_rank).unwrap_or(defaults.max_rank),
                seed: seed.or(config.seed).unwrap_or(defaults.seed),
                adorns,
                pool_target: config.pool_target.unwrap_or(defaults.pool_target),
                witness_count: config.witness_count.unwrap_or(defaults.witness_count),
                report: report.clone(),
            };
            adorned_cli::run_oracle(&mut session, &universe, &settings)
        }
        Command::Selftest => adorned_cli::run_selftest(&mut session),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json renders"));
            } else {
                println!("{}", out.human);
            }
            if out.failed_checks > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
