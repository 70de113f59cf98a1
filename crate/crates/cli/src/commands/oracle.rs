use std::fmt::Write;

use anyhow::Result;
use serde::Serialize;
use solidcone::linalg::render_bracket;
use solidcone::solidangle::{lhuilier_3d, mc_solid_angle, solid_angle, solid_angle_2d, McEstimate, PairwiseAngles};

use super::QuadArgs;
use crate::input::read_gram;
use crate::output::{f9, Output};

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Bracket form, a JSON file path, or `-` for stdin.
    pub input: String,
    #[command(flatten)]
    pub quad: QuadArgs,
    /// Monte Carlo sample count.
    #[arg(long = "mc-samples", default_value_t = 1_000_000)]
    pub mc_samples: u64,
    /// Monte Carlo seed.
    #[arg(long = "mc-seed", default_value_t = 42)]
    pub mc_seed: u64,
}

#[derive(Serialize)]
pub struct ClosedForm {
    pub name: &'static str,
    pub omega: f64,
    pub delta: f64,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub form: String,
    pub n: usize,
    pub omega: f64,
    pub omega_error: f64,
    pub monte_carlo: McEstimate,
    /// `(|Δ| − quadrature error) / stderr`, floored at 0.
    pub z: f64,
    pub monte_carlo_agrees: bool,
    pub closed_form: Option<ClosedForm>,
}

pub fn run(args: Args) -> Result<Output> {
    let q = read_gram(&args.input)?;
    let w = solid_angle(&q, &args.quad.spec())?;
    let mc = mc_solid_angle(&q.cholesky_basis(), args.mc_samples, args.mc_seed)?;
    let z = ((w.omega - mc.estimate).abs() - w.omega_error()).max(0.0) / mc.stderr;
    let closed = match q.dim() {
        2 => Some(("planar-arccos", solid_angle_2d(&q)?.omega)),
        3 => Some(("spherical-excess", lhuilier_3d(&PairwiseAngles::from_gram(&q)?))),
        _ => None,
    }
    .map(|(name, omega)| {
        let delta = w.omega - omega;
        ClosedForm { name, omega, delta, agree: delta.abs() <= 1e-6 + w.omega_error() }
    });
    let report = OracleReport {
        form: render_bracket(&q),
        n: q.dim(),
        omega: w.omega,
        omega_error: w.omega_error(),
        monte_carlo_agrees: z <= 3.0,
        z,
        monte_carlo: mc,
        closed_form: closed,
    };
    let mut text = String::new();
    writeln!(text, "form         {}", report.form)?;
    writeln!(text, "quadrature   {} +- {}", f9(report.omega), f9(report.omega_error))?;
    let mc = &report.monte_carlo;
    writeln!(text, "monte carlo  {} +- {} ({} samples)", f9(mc.estimate), f9(mc.stderr), mc.samples)?;
    writeln!(text, "z            {} ({})", f9(report.z), if report.monte_carlo_agrees { "agree" } else { "DISAGREE" })?;
    if let Some(c) = &report.closed_form {
        writeln!(text, "{:<12} {} (delta {}, {})", c.name, f9(c.omega), f9(c.delta), if c.agree { "agree" } else { "DISAGREE" })?;
    }
    let agree = report.monte_carlo_agrees && report.closed_form.as_ref().is_none_or(|c| c.agree);
    Ok(Output::new(text, &report)?.code(if agree { 0 } else { 1 }))
}
