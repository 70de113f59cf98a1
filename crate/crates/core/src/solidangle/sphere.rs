use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Surface area of the unit sphere `S^(n-1)`, `n π^(n/2) / Γ(n/2 + 1)`.
pub fn surface_area(n: usize) -> f64 {
    assert!(n >= 1, "surface_area needs n >= 1");
    n as f64 * PI.powf(n as f64 / 2.0) / gamma_half_integer_plus_one(n)
}

/// `Γ(n/2 + 1)` for integer `n ≥ 0`.
fn gamma_half_integer_plus_one(n: usize) -> f64 {
    // Γ(1) = 1, Γ(3/2) = √π / 2, Γ(x + 1) = x Γ(x)
    let (mut g, mut x) = if n % 2 == 0 { (1.0, 1.0) } else { (PI.sqrt() / 2.0, 1.5) };
    let target = n as f64 / 2.0 + 1.0;
    while x < target - 0.25 {
        g *= x;
        x += 1.0;
    }
    g
}

/// Hyperspherical coordinates on the positive orthant patch.
///
/// `x1 = cos θ1, x2 = sin θ1 cos θ2, …, xn = sin θ1 ⋯ sin θ(n-1)`, surface
/// element `Π_k sin^(n-1-k) θ_k` (1-based `k` up to `n - 2`).
pub fn spherical_param(n: usize, angles: &[f64]) -> Result<(Vec<f64>, f64)> {
    if n < 2 {
        return Err(Error::UnsupportedDimension { n, context: "spherical parametrization" });
    }
    if angles.len() != n - 1 {
        return Err(Error::DimensionMismatch { expected: n - 1, found: angles.len() });
    }
    for (index, &value) in angles.iter().enumerate() {
        if !(0.0..=FRAC_PI_2).contains(&value) {
            return Err(Error::AngleOutOfRange { index, value });
        }
    }
    let mut x = Vec::with_capacity(n);
    let mut weight = 1.0;
    param_into(angles, &mut x, &mut weight);
    Ok((x, weight))
}

pub(crate) fn param_into(angles: &[f64], x: &mut Vec<f64>, weight: &mut f64) {
    let n = angles.len() + 1;
    x.clear();
    let mut s = 1.0;
    *weight = 1.0;
    for (k, &t) in angles.iter().enumerate() {
        let (st, ct) = t.sin_cos();
        x.push(s * ct);
        s *= st;
        if k + 2 < n {
            *weight *= st.powi((n - 2 - k) as i32);
        }
    }
    x.push(s);
}
