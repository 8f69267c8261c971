use chordal_powers::cli::{self, Structure, Suite};
use chordal_powers::formats::Format;
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "chordal-powers", version, about = "Chordal graph powers, clique trees, and strong colorings")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report for a graph file, or for every file in a
    /// directory (batch mode).
    Analyze {
        path: PathBuf,
        /// Input format: graph6, dimacs-col, or edge-list (default: by
        /// file extension).
        #[arg(long)]
        format: Option<String>,
        /// Highest power to include in the profile.
        #[arg(long)]
        k_max: Option<usize>,
        /// Uniform vertex budget for the brute-force oracle paths.
        #[arg(long)]
        oracle_budget: Option<usize>,
        /// Emit the JSON report (default: text).
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit the text report.
        #[arg(long)]
        text: bool,
    },
    /// Search for one structural witness and print it as JSON, or "none".
    Detect {
        path: PathBuf,
        /// flower | sunflower | sprout | line-square-chordal |
        /// line-square-perfect-necessary
        #[arg(long)]
        structure: String,
        /// Witness size for flower/sunflower/sprout searches.
        #[arg(long, default_value_t = 4)]
        size: usize,
        /// Enumerate all witnesses (flowers only).
        #[arg(long)]
        all: bool,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        oracle_budget: Option<usize>,
    },
    /// Run an agreement suite against the brute-force oracle.
    OracleCheck {
        /// chordality | flowers | line-square | strong-index
        #[arg(long)]
        suite: String,
        /// Size parameter of the suite (exhaustive n, max n, or max cycle
        /// length).
        #[arg(long)]
        n: Option<usize>,
        /// Number of random graphs to draw.
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for the splitmix generator; fixed seeds reproduce exactly.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_format(name: Option<String>) -> Result<Option<Format>, String> {
    match name {
        None => Ok(None),
        Some(name) => Format::from_name(&name)
            .map(Some)
            .ok_or_else(|| format!("unknown format '{name}'")),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let output = match args.command {
        Command::Analyze { path, format, k_max, oracle_budget, json, text: _ } => {
            match parse_format(format) {
                Ok(fmt) => cli::cmd_analyze(&path, fmt, k_max, oracle_budget, json),
                Err(message) => cli::CommandOutput { exit_code: cli::EXIT_INPUT, stdout: message },
            }
        }
        Command::Detect { path, structure, size, all, format, oracle_budget } => {
            match (Structure::from_name(&structure), parse_format(format)) {
                (Some(structure), Ok(fmt)) => {
                    cli::cmd_detect(&path, fmt, structure, size, all, oracle_budget)
                }
                (None, _) => cli::CommandOutput {
                    exit_code: cli::EXIT_INPUT,
                    stdout: format!("unknown structure '{structure}'"),
                },
                (_, Err(message)) => {
                    cli::CommandOutput { exit_code: cli::EXIT_INPUT, stdout: message }
                }
            }
        }
        Command::OracleCheck { suite, n, samples, seed } => match Suite::from_name(&suite) {
            Some(suite) => cli::cmd_oracle_check(suite, n, samples, seed),
            None => cli::CommandOutput {
                exit_code: cli::EXIT_INPUT,
                stdout: format!("unknown suite '{suite}'"),
            },
        },
    };
    println!("{}", output.stdout);
    ExitCode::from(output.exit_code as u8)
}
