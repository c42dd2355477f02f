//! `framekit`: batch front-end to the frame toolkit.
//!
//! Exit codes: 0 pass, 1 check failed (witness printed), 2 usage or input
//! error (message on stderr).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use framekit::ToleranceConfig;

use framekit_cli::commands::{self, Check, ConstructArgs, DualKind, FusionOp, Kind, Status};

const TOLERANCE_HELP: &str = "Tolerances: eq_tol 1e-9 (override with --tol), eig_offdiag_tol 1e-12, rank_tol 1e-10.
Exit codes: 0 pass, 1 check failed (witness printed), 2 usage or input error.";

#[derive(Parser)]
#[command(name = "framekit", version, about = "Finite frame toolkit", after_help = TOLERANCE_HELP)]
struct Cli {
    /// Equality tolerance for flags, identities and checks [default: 1e-9]
    #[arg(long, global = true, value_name = "EQ_TOL", allow_negative_numbers = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a frame and write it as a JSON document
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
        /// Seed for random-parseval
        #[arg(long, env = "FRAMEKIT_SEED")]
        seed: Option<u64>,
        /// Comma-separated eigenvalues of the frame operator
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        spectrum: Vec<f64>,
        /// Comma-separated squared vector norms
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        norms_squared: Vec<f64>,
        /// Frame to complete (tight-complete)
        #[arg(long)]
        input: Option<PathBuf>,
        /// Stored as meta.name
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full report: bounds, flags with witnesses, constants audit, duals
    Analyze {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run one check; exit 0 on pass, 1 on fail
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        check: Check,
        /// Second frame for dual-of
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// Fusion frame operations on a subspace document
    Fusion {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: FusionOp,
    },
    /// Canonical dual or canonical Parseval frame
    Dual {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "canonical")]
        kind: DualKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for weights making the frame Parseval
    Scale {
        file: PathBuf,
        /// Write the scaled frame here when feasible
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Unitary matrix whose first N rows are the synthesis matrix of a Parseval frame
    Naimark {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Status, String> {
    let mut tol = ToleranceConfig::default();
    if let Some(t) = cli.tol {
        tol = tol.with_eq_tol(t).map_err(|e| format!("--tol: {e}"))?;
    }
    match cli.command {
        Command::Construct { kind, dim, count, seed, spectrum, norms_squared, input, name, out } => {
            commands::construct(
                ConstructArgs { kind, dim, count, seed, spectrum, norms_squared, input, name, out },
                &tol,
            )
        }
        Command::Analyze { file, report } => commands::analyze(&file, report.as_deref(), &tol),
        Command::Verify { file, check, other } => commands::verify(&file, check, other.as_deref(), &tol),
        Command::Fusion { file, op } => commands::fusion(&file, op, &tol),
        Command::Dual { file, kind, out } => commands::dual(&file, kind, out.as_deref(), &tol),
        Command::Scale { file, out } => commands::scale(&file, out.as_deref(), &tol),
        Command::Naimark { file, out } => commands::naimark(&file, out.as_deref(), &tol),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
