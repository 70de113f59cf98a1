//! Normalized solid angle `ω_Q = √det(Q) / A_(n-1) · ∫_S (xᵀQx)^(-n/2) ds`.
//!
//! `S` is the part of the unit sphere in the positive orthant. The integral
//! is taken over the angle box `[0, π/2]^(n-1)` of [`spherical_param`].

mod lhuilier;
mod montecarlo;
mod quadrature;
mod sphere;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{GramMatrix, SymMatrix};

pub use lhuilier::{lhuilier_3d, PairwiseAngles};
pub use montecarlo::{mc_solid_angle, McEstimate};
pub use quadrature::{gauss_legendre, CompensatedSum};
pub use sphere::{spherical_param, surface_area};

/// Condition number above which results carry the ill-conditioned flag.
pub const ILL_CONDITIONED: f64 = 1e8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    GaussTensor,
    Adaptive,
    MonteCarlo,
    /// Result tag for the planar arccos formula.
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::GaussTensor => "gauss-tensor",
            Method::Adaptive => "adaptive",
            Method::MonteCarlo => "monte-carlo",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gauss-tensor" => Ok(Method::GaussTensor),
            "adaptive" => Ok(Method::Adaptive),
            "monte-carlo" => Ok(Method::MonteCarlo),
            other => Err(Error::InvalidSpec(format!("unknown method {other:?}"))),
        }
    }
}

/// Integration settings. `points_per_axis = None` picks 48 for `n ≤ 4` and
/// 32 for `n = 5`; for Monte Carlo `max_evaluations` is the sample count.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct QuadratureSpec {
    pub method: Method,
    pub points_per_axis: Option<usize>,
    pub target_abs_error: f64,
    pub max_evaluations: u64,
    pub seed: u64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            method: Method::GaussTensor,
            points_per_axis: None,
            target_abs_error: 1e-8,
            max_evaluations: 50_000_000,
            seed: 0,
        }
    }
}

impl QuadratureSpec {
    pub fn gauss(points: usize) -> Self {
        Self { points_per_axis: Some(points), ..Self::default() }
    }

    pub fn monte_carlo(samples: u64, seed: u64) -> Self {
        Self { method: Method::MonteCarlo, max_evaluations: samples, seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(p) = self.points_per_axis {
            if p < 2 {
                return Err(Error::InvalidSpec(format!("points-per-axis must be at least 2, got {p}")));
            }
        }
        if !(self.target_abs_error > 0.0) {
            return Err(Error::InvalidSpec(format!("target-abs-error must be positive, got {}", self.target_abs_error)));
        }
        Ok(())
    }

    pub fn points_for(&self, n: usize) -> usize {
        self.points_per_axis.unwrap_or(if n <= 4 { 48 } else { 32 })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// Absolute; `|I(p) − I(p/2)|`, the adaptive error sum, or one standard error.
    pub error_estimate: f64,
    pub evaluations: u64,
    pub method: Method,
    /// `error_estimate ≤ target_abs_error`.
    pub converged: bool,
    /// The evaluation budget forced a coarser rule than requested.
    pub budget_limited: bool,
    pub ill_conditioned: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolidAngle {
    pub omega: f64,
    pub det: f64,
    pub surface_area: f64,
    pub integral: QuadratureResult,
}

impl SolidAngle {
    fn assemble(det: f64, n: usize, integral: QuadratureResult) -> Self {
        let area = surface_area(n);
        Self { omega: det.sqrt() * integral.value / area, det, surface_area: area, integral }
    }

    /// Absolute error on `omega` implied by the integral's estimate.
    pub fn omega_error(&self) -> f64 {
        self.det.sqrt() * self.integral.error_estimate / self.surface_area
    }
}

fn check_integral_dim(n: usize) -> Result<()> {
    if !(2..=5).contains(&n) {
        return Err(Error::UnsupportedDimension { n, context: "orthant integral (2 ≤ n ≤ 5)" });
    }
    Ok(())
}

fn neg_half_power(q: f64, n: usize) -> f64 {
    match n {
        2 => q.recip(),
        4 => (q * q).recip(),
        _ => (q.powi(n as i32)).sqrt().recip(),
    }
}

/// `∫_S (xᵀQx)^(-n/2) ds` for `2 ≤ n ≤ 5`.
pub fn orthant_integral(q: &GramMatrix, spec: &QuadratureSpec) -> Result<QuadratureResult> {
    let n = q.dim();
    check_integral_dim(n)?;
    let m = q.as_sym();
    let mut r = quadrature::integrate_orthant(n, spec, &|x| neg_half_power(m.quadratic_form_unchecked(x), n))?;
    r.ill_conditioned = q.condition_number() > ILL_CONDITIONED;
    Ok(r)
}

/// `ω_Q`; the planar case uses [`solid_angle_2d`].
pub fn solid_angle(q: &GramMatrix, spec: &QuadratureSpec) -> Result<SolidAngle> {
    spec.validate()?;
    if q.dim() == 2 {
        return solid_angle_2d(q);
    }
    let integral = orthant_integral(q, spec)?;
    Ok(SolidAngle::assemble(q.determinant(), q.dim(), integral))
}

/// `ω = arccos(q12 / √(q11 q22)) / 2π`.
pub fn solid_angle_2d(q: &GramMatrix) -> Result<SolidAngle> {
    if q.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: q.dim() });
    }
    let cos = (q.get(0, 1) / (q.get(0, 0) * q.get(1, 1)).sqrt()).clamp(-1.0, 1.0);
    let omega = cos.acos() / (2.0 * PI);
    let det = q.determinant();
    let area = surface_area(2);
    let integral = QuadratureResult {
        value: omega * area / det.sqrt(),
        error_estimate: 0.0,
        evaluations: 0,
        method: Method::ClosedForm,
        converged: true,
        budget_limited: false,
        ill_conditioned: q.condition_number() > ILL_CONDITIONED,
    };
    Ok(SolidAngle { omega, det, surface_area: area, integral })
}

/// `d²/dt² ∫_S (xᵀ(Q + tD)x)^(-n/2) ds` at `t = 0`, i.e.
/// `(n/2)(n/2+1) ∫_S (xᵀDx)² (xᵀQx)^(-n/2-2) ds`.
///
/// `Q` may be singular when its diagonal is positive and its off-diagonal
/// entries are nonnegative: then `xᵀQx ≥ min q_ii` on the orthant and the
/// integrand stays bounded.
pub fn perturbation_second_derivative(
    q: &SymMatrix,
    direction: &SymMatrix,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    let n = q.dim();
    check_integral_dim(n)?;
    if direction.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: direction.dim() });
    }
    let ill_conditioned = match GramMatrix::new(q.clone()) {
        Ok(g) => g.condition_number() > ILL_CONDITIONED,
        Err(e) => {
            let copositive =
                (0..n).all(|i| q.get(i, i) > 0.0 && (i + 1..n).all(|j| q.get(i, j) >= 0.0));
            if !copositive {
                return Err(e);
            }
            false
        }
    };
    let h = n as f64 / 2.0;
    let factor = h * (h + 1.0);
    let mut r = quadrature::integrate_orthant(n, spec, &|x| {
        let qx = q.quadratic_form_unchecked(x);
        let dx = direction.quadratic_form_unchecked(x);
        factor * dx * dx * neg_half_power(qx, n) / (qx * qx)
    })?;
    r.ill_conditioned = ill_conditioned;
    Ok(r)
}
