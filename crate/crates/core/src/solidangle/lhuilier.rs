use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::SymMatrix;

/// Side lengths of the spherical triangle cut out by a rank-3 cone: the
/// angles between the three pairs of basis vectors.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PairwiseAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl PairwiseAngles {
    /// Sides in `(0, π)` obeying the spherical triangle inequalities;
    /// equality is allowed and yields a zero-area triangle.
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let sides = [alpha, beta, gamma];
        if sides.iter().any(|s| !(*s > 0.0 && *s < PI)) {
            return Err(Error::InvalidAngles(format!("sides {sides:?} must lie in (0, π)")));
        }
        let slack = 1e-12;
        let sum = alpha + beta + gamma;
        if sides.iter().any(|&s| s > sum - s + slack) || sum > 2.0 * PI + slack {
            return Err(Error::InvalidAngles(format!("sides {sides:?} violate the spherical triangle inequalities")));
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// Angles between the columns of a basis with Gram matrix `q`.
    pub fn from_gram(q: &SymMatrix) -> Result<Self> {
        if q.dim() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: q.dim() });
        }
        let angle = |i: usize, j: usize| (q.get(i, j) / (q.get(i, i) * q.get(j, j)).sqrt()).clamp(-1.0, 1.0).acos();
        Self::new(angle(1, 2), angle(0, 2), angle(0, 1))
    }
}

/// `ω = Ω / 4π` with `tan²(Ω/4) = tan(s/2) Π tan((s − side)/2)`.
pub fn lhuilier_3d(angles: &PairwiseAngles) -> f64 {
    let PairwiseAngles { alpha, beta, gamma } = *angles;
    let s = (alpha + beta + gamma) / 2.0;
    let t = (s / 2.0).tan() * ((s - alpha) / 2.0).tan() * ((s - beta) / 2.0).tan() * ((s - gamma) / 2.0).tan();
    let excess = 4.0 * t.max(0.0).sqrt().atan();
    excess / (4.0 * PI)
}
