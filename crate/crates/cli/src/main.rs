use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use vnlw_cli::problem::positive;
use vnlw_cli::{parse_problem, run, CliError, Mode};

#[derive(Parser)]
#[command(
    name = "vnlw",
    version,
    about = "Stationary and time-dependent von Neumann-Landau problems on box domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the boundary-value problem and write theta.csv, phi.csv and report.txt
    Solve(Args),
    /// Propagate an initial field and write state CSVs, norms.csv and gap tables
    Evolve(Args),
    /// Run the invariant suite on the problem's grid and operator
    Verify(Args),
}

#[derive(clap::Args)]
struct Args {
    /// JSON problem file
    spec: PathBuf,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
    /// Weak-residual tolerance
    #[arg(long)]
    tol_weak: Option<f64>,
    /// Tolerance for algebraic identities
    #[arg(long)]
    tol_alg: Option<f64>,
}

fn execute(mode: Mode, args: Args) -> Result<(), CliError> {
    let mut spec = parse_problem(&args.spec, Some(mode))?;
    if let Some(t) = args.tol_weak {
        spec.tolerances.weak = positive("--tol-weak", t)?;
    }
    if let Some(t) = args.tol_alg {
        spec.tolerances.algebraic = positive("--tol-alg", t)?;
    }
    run(&spec, &args.out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (mode, args) = match cli.command {
        Command::Solve(a) => (Mode::Solve, a),
        Command::Evolve(a) => (Mode::Evolve, a),
        Command::Verify(a) => (Mode::Verify, a),
    };
    match execute(mode, args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("vnlw: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
