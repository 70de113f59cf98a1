//! `solidcone`: reduction checks, solid angles, vertex tables and the
//! reference-table reproductions from the command line.
//!
//! Exit codes: 0 success (for `check`: reduced), 1 a negative verdict
//! (`check`: not reduced; `reproduce`: a row misses its reference value),
//! 2 any error.

mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{angle, check, extremal, oracle, reproduce, scan};

#[derive(Parser, Debug)]
#[command(name = "solidcone", version, about = "Solid angles of lattice-basis cones and Minkowski reduction")]
struct Cli {
    /// Worker threads for quadrature and scans; results do not depend on it.
    #[arg(long, global = true, env = "SOLIDCONE_THREADS")]
    threads: Option<usize>,

    /// Machine-readable JSON instead of text or CSV.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check Minkowski reduction (ranks 2 to 4).
    Check(check::Args),
    /// Normalized solid angle of the cone of a Gram matrix.
    Angle(angle::Args),
    /// Minimal determinant over reduced forms with a fixed diagonal.
    Mindet(extremal::MinDetArgs),
    /// Vertices of a fixed-diagonal reduced domain.
    Vertices(extremal::VerticesArgs),
    /// Solid angle on the reduced triangle in the (a2, b2) plane.
    Scan(scan::ScanArgs),
    /// Solid angle along one edge of the reduced triangle.
    Edge(scan::EdgeArgs),
    /// Quadrature against sampling and closed forms.
    Oracle(oracle::Args),
    /// Recompute a reference table with tolerances and verdicts.
    Reproduce(reproduce::Args),
}

fn run(cli: Cli) -> anyhow::Result<output::Output> {
    if let Some(n) = cli.threads {
        anyhow::ensure!(n > 0, "--threads must be positive");
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match cli.command {
        Command::Check(a) => check::run(a),
        Command::Angle(a) => angle::run(a),
        Command::Mindet(a) => extremal::mindet(a),
        Command::Vertices(a) => extremal::vertices(a),
        Command::Scan(a) => scan::scan(a),
        Command::Edge(a) => scan::edge(a),
        Command::Oracle(a) => oracle::run(a),
        Command::Reproduce(a) => reproduce::run(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli).and_then(|out| out.emit(json)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
