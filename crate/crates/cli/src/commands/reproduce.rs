use std::path::PathBuf;

use anyhow::Result;
use solidcone::extremal::{reproduce_table, TableName, TableRow};

use super::QuadArgs;
use crate::output::{csv_table, f9, Output};

#[derive(clap::Args, Debug)]
pub struct Args {
    /// lemma43, lemma44, dim4, dim5, vertices23 or vertices24.
    #[arg(long)]
    pub table: TableName,
    #[command(flatten)]
    pub quad: QuadArgs,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn opt(x: Option<f64>) -> String {
    x.map(f9).unwrap_or_default()
}

fn record(r: &TableRow) -> Vec<String> {
    vec![
        r.quantity.clone(),
        r.computed.to_string(),
        r.reference.to_string(),
        opt(r.delta),
        opt(r.tolerance),
        opt(r.error_estimate),
        r.converged.to_string(),
        if r.pass { "PASS" } else { "FAIL" }.into(),
    ]
}

pub fn run(args: Args) -> Result<Output> {
    let t = reproduce_table(args.table, &args.quad.spec())?;
    let csv = csv_table(
        &["quantity", "computed", "reference", "delta", "tolerance", "error_estimate", "converged", "pass"],
        t.rows.iter().map(record),
    )?;
    let code = if t.pass { 0 } else { 1 };
    Ok(Output::new(csv, &t)?.code(code).to_file(args.out))
}
