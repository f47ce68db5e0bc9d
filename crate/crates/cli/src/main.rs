//! `ksl`: exact torus-knot and surgery invariants from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! parse errors.

mod commands;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "ksl",
    version,
    about = "Exact torus-knot, staircase and surgery invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Genus, Alexander polynomial, Δ″(1)/2 and signature of T(a,b).
    Invariants {
        knot: String,
        #[arg(long, value_enum, default_value_t = QueryFormat::Text)]
        format: QueryFormat,
    },
    /// Classify p/q-surgery on T(a,b).
    #[command(allow_negative_numbers = true)]
    Surgery {
        knot: String,
        slope: String,
        #[arg(long, value_enum, default_value_t = QueryFormat::Text)]
        format: QueryFormat,
    },
    /// Instantiate and verify members of the torus-knot pair family.
    Pairs {
        /// Level k: repeatable, or a range such as `1..4`.
        #[arg(long, required = true)]
        k: Vec<String>,
        /// Parameter n: repeatable, or a range such as `2..8`.
        #[arg(long, required = true)]
        n: Vec<String>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Enumerate staircases of a given genus.
    Staircases {
        #[arg(long)]
        genus: i64,
        #[arg(long, value_enum, default_value_t = StaircaseMode::List)]
        mode: StaircaseMode,
    },
    /// Run the verification suite and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Scope::All)]
        scope: verify::Scope,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QueryFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum StaircaseMode {
    List,
    Count,
    Extremal,
    Collisions,
}

/// What a successful run amounts to: everything checked out, or some
/// verification failed.
enum Outcome {
    Ok,
    VerificationFailed,
}

/// A usage or input error; reported on stderr with exit code 2.
struct UsageError(String);

impl From<ksl::Error> for UsageError {
    fn from(e: ksl::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn configure_threads() -> Result<(), UsageError> {
    let Ok(raw) = std::env::var("KSL_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        UsageError(format!(
            "KSL_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| UsageError(e.to_string()))
}

fn run(cli: Cli) -> Result<Outcome, UsageError> {
    configure_threads()?;
    match cli.command {
        Command::Invariants { knot, format } => commands::invariants(&knot, format),
        Command::Surgery {
            knot,
            slope,
            format,
        } => commands::surgery(&knot, &slope, format),
        Command::Pairs { k, n, format } => commands::pairs(&k, &n, format),
        Command::Staircases { genus, mode } => commands::staircases(genus, mode),
        Command::Verify { scope } => Ok(verify::run(scope)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
