mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use unitary_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "unitary",
    version,
    about = "Character theory of finite unitary groups U(n, F_{q^2})"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Add floating-point approximations next to exact values.
    #[arg(long, global = true)]
    pub approx: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Semisimple,
    Regular,
    Unipotent,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Constant {
    #[value(name = "-1")]
    MinusOne,
    #[value(name = "1")]
    PlusOne,
    Any,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Prime power q; the group is U(n, F_{q^2}).
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub q: u64,
    /// Matrix degree n.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count real semisimple characters by Frobenius-Schur indicator.
    Census(GroupArgs),
    /// List irreducible characters with degrees and classification flags.
    Degrees {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Family::All)]
        family: Family,
    },
    /// Print the full character table.
    Chartable {
        #[command(flatten)]
        group: GroupArgs,
        /// Largest accepted table size estimate.
        #[arg(long, default_value_t = unitary_core::symfunc::table::DEFAULT_TABLE_BOUND)]
        bound: u128,
    },
    /// Frobenius-Schur indicators of a family of characters.
    Fs {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Family::Semisimple)]
        family: Family,
        /// Also sum over the character table and compare.
        #[arg(long)]
        brute: bool,
        /// Largest n for which the table-based indicator is attempted.
        #[arg(long, default_value_t = unitary_core::characters::DEFAULT_FS_MAX_N)]
        max_n: u32,
    },
    /// Enumerate self-dual polynomials of degree n over F_q.
    Selfdual {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Constant::Any, allow_hyphen_values = true)]
        constant: Constant,
        /// Include the self-dual factorization of each polynomial.
        #[arg(long)]
        factor: bool,
    },
    /// Run the invariant suite for every n up to --max-n.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, default_value_t = unitary_core::symfunc::table::DEFAULT_TABLE_BOUND)]
        bound: u128,
    },
}

/// How a command failed: bad input or a refused request, versus a broken
/// internal invariant.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::Unsupported(_)
            | Error::ResourceBound { .. }
            | Error::SizeMismatch { .. }
            | Error::LevelNotDivisor { .. }
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(format!("{e:#}"))
    }
}

/// Rendered output, plus a failure to report after it has been written.
pub struct Output {
    pub text: String,
    pub failed: Option<String>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, failed: None }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let common = cli.common.clone();
    match cli.command {
        Command::Census(g) => commands::census(&common, &g),
        Command::Degrees { group, family } => commands::degrees(&common, &group, family),
        Command::Chartable { group, bound } => commands::chartable(&common, &group, bound),
        Command::Fs {
            group,
            family,
            brute,
            max_n,
        } => commands::fs(&common, &group, family, brute, max_n),
        Command::Selfdual {
            group,
            constant,
            factor,
        } => commands::selfdual(&common, &group, constant, factor),
        Command::Verify { q, max_n, bound } => commands::verify(&common, q, max_n, bound),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.common.clone();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(common.jobs.unwrap_or(0) as usize)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(output) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, &output.text)
                    .map_err(|e| format!("{}: {e}", path.display())),
                None => std::io::stdout()
                    .write_all(output.text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            match (written, output.failed) {
                (Ok(()), None) => ExitCode::SUCCESS,
                (Err(e), _) | (Ok(()), Some(e)) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
