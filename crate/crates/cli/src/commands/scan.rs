use std::path::PathBuf;

use anyhow::Result;
use solidcone::extremal::{edge_profile, triangle_scan, Edge, ScanPoint, DEFAULT_GRID};

use super::QuadArgs;
use crate::output::{csv_table, f9, Output};

#[derive(clap::Args, Debug)]
pub struct ScanArgs {
    /// Lattice points per side of the triangle.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    #[command(flatten)]
    pub quad: QuadArgs,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct EdgeArgs {
    /// Horizontal edge at this b2; omit for the hypotenuse a2 + b2 = 1/2.
    #[arg(long)]
    pub b2: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn points_csv(points: &[ScanPoint]) -> Result<String> {
    csv_table(
        &["a2", "b2", "omega", "error"],
        points.iter().map(|p| vec![f9(p.a2), f9(p.b2), f9(p.omega), f9(p.error)]),
    )
}

pub fn scan(args: ScanArgs) -> Result<Output> {
    let s = triangle_scan(args.grid, &args.quad.spec())?;
    Ok(Output::new(points_csv(&s.points)?, &s)?.to_file(args.out))
}

pub fn edge(args: EdgeArgs) -> Result<Output> {
    let edge = args.b2.map_or(Edge::Hypotenuse, |b2| Edge::Horizontal { b2 });
    let p = edge_profile(edge, args.grid, &args.quad.spec())?;
    Ok(Output::new(points_csv(&p.points)?, &p)?.to_file(args.out))
}
