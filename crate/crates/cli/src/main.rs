//! `subdyn` — build interval-splitting sets, certify the subgradient
//! dynamics of the functions constructed over them, and emit CSV/SVG/JSON
//! artifacts.
//!
//! Exit codes follow the verdict contract: 0 when every check verified,
//! 1 when any check is violated, 2 when some checks are undecided (and
//! none violated). Configuration problems exit with 64, internal errors
//! with 70.

mod commands;
mod config;
mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{
    CantorConfig, IncreaseConfig, PeriodicConfig, SgdConfig, SplitVerifyConfig, EXIT_SOFTWARE,
    EXIT_USAGE,
};

#[derive(Parser)]
#[command(name = "subdyn", version, about = "Certified splitting sets and the subgradient dynamics built over them")]
struct Cli {
    /// Directory for emitted artifacts (created if missing).
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,

    /// Refinement depth for all certified measure queries
    /// [default: $SUBDYN_DEPTH or 20].
    #[arg(long, global = true)]
    depth: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WithConfig<T: Args> {
    /// JSON config file; explicit flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,

    #[command(flatten)]
    flags: T,
}

#[derive(Subcommand)]
enum Command {
    /// Build a fat Cantor set; certify its measure bracket per depth and
    /// the cumulative mass floor on a dyadic grid.
    Cantor(WithConfig<CantorConfig>),
    /// Build the splitting set; certify the controlled-split floor and the
    /// splitting property on enumerated intervals.
    SplitVerify(WithConfig<SplitVerifyConfig>),
    /// Certify linear value increase along the straight subgradient orbit.
    Increase(WithConfig<IncreaseConfig>),
    /// Certify the periodic doubled orbit; emit trajectory CSV and the
    /// two-panel SVG figure.
    Periodic(WithConfig<PeriodicConfig>),
    /// Run the discrete subgradient iteration; certify radius recursion,
    /// rotation symmetry and distance floors.
    Sgd(WithConfig<SgdConfig>),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let depth = match config::resolve_depth(cli.depth) {
        Ok(d) => d,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let run = || -> anyhow::Result<i32> {
        std::fs::create_dir_all(&cli.out)?;
        match &cli.command {
            Command::Cantor(wc) => {
                let params = config::merge(&wc.config, &wc.flags)?.resolve(depth)?;
                commands::run_cantor(&params, &cli.out)
            }
            Command::SplitVerify(wc) => {
                let params = config::merge(&wc.config, &wc.flags)?.resolve(depth)?;
                commands::run_split_verify(&params, &cli.out)
            }
            Command::Increase(wc) => {
                let params = config::merge(&wc.config, &wc.flags)?.resolve(depth)?;
                commands::run_increase(&params, &cli.out)
            }
            Command::Periodic(wc) => {
                let params = config::merge(&wc.config, &wc.flags)?.resolve(depth)?;
                commands::run_periodic(&params, &cli.out)
            }
            Command::Sgd(wc) => {
                let params = config::merge(&wc.config, &wc.flags)?.resolve(depth)?;
                commands::run_sgd(&params, &cli.out)
            }
        }
    };
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(if config::is_usage_error(&err) {
                EXIT_USAGE
            } else {
                EXIT_SOFTWARE
            })
        }
    }
}
