use std::fmt::Write;

use anyhow::Result;
use serde::Serialize;
use solidcone::linalg::{format_rational, render_bracket};
use solidcone::reduction::sign_flip_min;
use solidcone::solidangle::solid_angle;
use solidcone::{GramMatrix, QuadratureResult};

use super::QuadArgs;
use crate::input::read_gram;
use crate::output::{f9, Output};

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Bracket form, a JSON file path, or `-` for stdin.
    pub input: String,
    #[command(flatten)]
    pub quad: QuadArgs,
    /// Minimize over the sign classes of the basis vectors.
    #[arg(long)]
    pub min_over_signs: bool,
}

#[derive(Serialize)]
pub struct SignClass {
    pub signs: Vec<i8>,
    pub omega: f64,
}

#[derive(Serialize)]
pub struct AngleReport {
    pub form: String,
    pub n: usize,
    /// Exact fraction for exact input.
    pub det: String,
    pub omega: f64,
    pub omega_error: f64,
    /// `ω · A_(n-1)`, i.e. `√det · ∫`.
    pub scaled: f64,
    pub integral: QuadratureResult,
    pub signs: Option<Vec<i8>>,
    pub sign_classes: Option<Vec<SignClass>>,
}

fn det_string(q: &GramMatrix) -> String {
    q.exact_determinant().map_or_else(|| f9(q.determinant()), |d| format_rational(&d))
}

pub fn run(args: Args) -> Result<Output> {
    let q = read_gram(&args.input)?;
    let spec = args.quad.spec();
    let (w, signs, classes) = if args.min_over_signs {
        let r = sign_flip_min(&q.cholesky_basis(), &spec)?;
        let classes = r.candidates.into_iter().map(|(signs, omega)| SignClass { signs, omega }).collect();
        (r.solid_angle, Some(r.signs), Some(classes))
    } else {
        (solid_angle(&q, &spec)?, None, None)
    };
    let report = AngleReport {
        form: render_bracket(&q),
        n: q.dim(),
        det: det_string(&q),
        omega: w.omega,
        omega_error: w.omega_error(),
        scaled: w.omega * w.surface_area,
        integral: w.integral.clone(),
        signs,
        sign_classes: classes,
    };
    let mut text = String::new();
    writeln!(text, "form         {}", report.form)?;
    writeln!(text, "det          {}", report.det)?;
    writeln!(text, "omega        {} +- {}", f9(report.omega), f9(report.omega_error))?;
    writeln!(text, "omega*A      {}", f9(report.scaled))?;
    let i = &report.integral;
    writeln!(text, "integral     {} +- {}", f9(i.value), f9(i.error_estimate))?;
    writeln!(text, "method       {} ({} evaluations)", i.method, i.evaluations)?;
    let mut flags = vec![if i.converged { "converged" } else { "NOT converged" }];
    if i.budget_limited {
        flags.push("budget-limited");
    }
    if i.ill_conditioned {
        flags.push("ill-conditioned");
    }
    writeln!(text, "status       {}", flags.join(", "))?;
    if let Some(s) = &report.signs {
        writeln!(text, "best signs   {s:?}")?;
    }
    Ok(Output::new(text, &report)?)
}
