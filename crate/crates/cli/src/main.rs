//! `pascalian` — command-line surface over the pascalian toolkit.
//!
//! Subcommands: `triangle`, `bijection`, `verify`, `roots`, `curve`.
//! Exit code 0 when every check in the invocation passed, 1 when a check
//! failed, 2 on usage or runtime errors.

mod commands;
mod output;

use clap::{Parser, Subcommand};
use output::Format;
use pascalian::roots::SolverConfig;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pascalian", version, about = "Sorted-binomial triangle, polynomials, roots, and limit curve")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; commands accept text/csv/json except roots and curve,
    /// which accept csv/json/svg
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Scaled-residual tolerance for the root solver (default 1e-10)
    #[arg(long, global = true)]
    tol_residual: Option<f64>,

    /// Axis threshold for real/imaginary root classification (default 1e-8)
    #[arg(long, global = true)]
    tol_imag: Option<f64>,

    /// Reserved; the solver is deterministic and takes no randomness
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=n-max of the sorted-binomial triangle
    Triangle {
        #[arg(long)]
        n_max: u32,
        /// Append each row's sum (always included in JSON output)
        #[arg(long)]
        sums: bool,
    },
    /// Enumerate the two-row tableaux for n, their walks, and verify the
    /// bijection statistics (cap configurable via PASCALIAN_CAP)
    Bijection {
        #[arg(long)]
        n: u32,
    },
    /// Run the exact verification suites up to n-max
    Verify {
        #[arg(long, value_enum)]
        suite: commands::verify::Suite,
        #[arg(long)]
        n_max: u32,
    },
    /// Solve for all complex roots of the degree-n polynomial
    Roots {
        #[arg(long)]
        n: u32,
    },
    /// Emit region boundaries, approximants, roots, and convergence metrics
    Curve {
        #[arg(long)]
        n: u32,
        /// Also compute the convergence metrics (needs n >= 3)
        #[arg(long)]
        metrics: bool,
        /// Boundary samples per curve in the output
        #[arg(long, default_value_t = 720)]
        samples: usize,
    },
}

fn solver_config(cli: &Cli) -> anyhow::Result<SolverConfig> {
    let mut cfg = SolverConfig::default();
    if let Some(tol) = cli.tol_residual {
        anyhow::ensure!(tol > 0.0, "--tol-residual must be positive");
        cfg.residual_tol = tol;
    }
    if let Some(tol) = cli.tol_imag {
        anyhow::ensure!(tol > 0.0, "--tol-imag must be positive");
        cfg.imag_tol = tol;
    }
    Ok(cfg)
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let cfg = solver_config(cli)?;
    let out = cli.out.as_ref();
    match cli.command {
        Command::Triangle { n_max, sums } => {
            commands::triangle::run(n_max, sums, cli.format, out)
        }
        Command::Bijection { n } => commands::bijection::run(n, cli.format, out),
        Command::Verify { suite, n_max } => {
            commands::verify::run(suite, n_max, cli.format, out)
        }
        Command::Roots { n } => commands::roots::run(n, &cfg, cli.format, out),
        Command::Curve { n, metrics, samples } => {
            commands::curve::run(n, metrics, samples, &cfg, cli.format, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
