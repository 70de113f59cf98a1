pub mod angle;
pub mod check;
pub mod extremal;
pub mod oracle;
pub mod reproduce;
pub mod scan;

use solidcone::solidangle::Method;
use solidcone::QuadratureSpec;

/// Integration flags shared by every command that integrates.
#[derive(clap::Args, Debug, Clone)]
pub struct QuadArgs {
    /// gauss-tensor, adaptive or monte-carlo.
    #[arg(long, default_value = "gauss-tensor")]
    pub method: Method,
    /// Gauss points per axis (default 48 up to rank 4, 32 in rank 5).
    #[arg(long)]
    pub points: Option<usize>,
    /// Monte Carlo seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Absolute error target on the orthant integral.
    #[arg(long, default_value_t = 1e-8)]
    pub target_error: f64,
    /// Integrand evaluation budget; the sample count for Monte Carlo.
    #[arg(long, visible_alias = "samples", default_value_t = 50_000_000)]
    pub max_evaluations: u64,
}

impl QuadArgs {
    pub fn spec(&self) -> QuadratureSpec {
        QuadratureSpec {
            method: self.method,
            points_per_axis: self.points,
            target_abs_error: self.target_error,
            max_evaluations: self.max_evaluations,
            seed: self.seed,
        }
    }
}
