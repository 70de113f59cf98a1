use std::fmt::Write;

use anyhow::Result;
use solidcone::linalg::render_bracket;
use solidcone::reduction::{check_reduced, ConditionSlack};

use crate::input::read_matrix;
use crate::output::{f9, Output};

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Bracket form `[a,d,e;b,f;c]`, a JSON file path, or `-` for stdin.
    pub input: String,
    /// Absolute slack tolerance; exact input is decided exactly without it.
    #[arg(long)]
    pub tol: Option<f64>,
}

fn slack_text(c: &ConditionSlack) -> String {
    c.exact_slack.clone().unwrap_or_else(|| f9(c.slack))
}

pub fn run(args: Args) -> Result<Output> {
    let q = read_matrix(&args.input)?;
    let report = check_reduced(&q, args.tol)?;
    let mut text = String::new();
    writeln!(text, "form      {}", render_bracket(&q))?;
    writeln!(text, "reduced   {}", if report.is_reduced { "yes" } else { "no" })?;
    let mode = if report.exact { "exact".to_string() } else { format!("tolerance {}", f9(report.tolerance)) };
    writeln!(text, "mode      {mode}")?;
    writeln!(text, "active    {}", report.active.len())?;
    for c in report.active_conditions() {
        writeln!(text, "  {:<32} slack {}", c.condition.label, slack_text(c))?;
    }
    writeln!(text, "violated  {}", report.violated.len())?;
    for c in report.violated_conditions() {
        writeln!(text, "  {:<32} slack {}", c.condition.label, slack_text(c))?;
    }
    let code = if report.is_reduced { 0 } else { 1 };
    Ok(Output::new(text, &report)?.code(code))
}
