//! The reduced triangle `{a2, b2 ∈ [0, 1/2], a2 + b2 ≥ 1/2}` of unit-diagonal
//! rank-4 forms with `a1 = c1 = a3 = b1 = 1/2`.
//!
//! Corners: `A = (1/2, 1/2)`, `B = (0, 1/2)`, `C = (1/2, 0)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::triangle_form;
use crate::linalg::GramMatrix;
use crate::solidangle::{solid_angle, QuadratureSpec};

pub const DEFAULT_GRID: usize = 33;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Corner {
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanPoint {
    pub a2: f64,
    pub b2: f64,
    pub omega: f64,
    pub error: f64,
    pub det: f64,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TriangleScan {
    pub grid: usize,
    pub points: Vec<ScanPoint>,
    /// Index into `points` of the smallest `ω` (first on ties).
    pub minimizer: usize,
    pub minimizer_corner: Option<Corner>,
}

impl TriangleScan {
    pub fn min_point(&self) -> &ScanPoint {
        &self.points[self.minimizer]
    }
}

fn evaluate(a2: f64, b2: f64, spec: &QuadratureSpec) -> Result<ScanPoint> {
    let q = GramMatrix::new(triangle_form(a2, b2))?;
    let w = solid_angle(&q, spec)?;
    Ok(ScanPoint { a2, b2, omega: w.omega, error: w.omega_error(), det: w.det, converged: w.integral.converged })
}

fn corner_of(a2: f64, b2: f64) -> Option<Corner> {
    match (a2, b2) {
        (0.5, 0.5) => Some(Corner::A),
        (0.0, 0.5) => Some(Corner::B),
        (0.5, 0.0) => Some(Corner::C),
        _ => None,
    }
}

fn argmin(values: impl Iterator<Item = f64>) -> usize {
    values
        .enumerate()
        .min_by(|(i, x), (j, y)| x.total_cmp(y).then(i.cmp(j)))
        .map(|(i, _)| i)
        .expect("non-empty")
}

/// `ω` on the lattice `a2 = i/(2(g−1))`, `b2 = j/(2(g−1))` with `i + j ≥ g − 1`,
/// listed with `a2` slowest.
pub fn triangle_scan(grid: usize, spec: &QuadratureSpec) -> Result<TriangleScan> {
    if grid < 2 {
        return Err(Error::Domain(format!("grid must be at least 2, got {grid}")));
    }
    let m = grid - 1;
    let step = |k: usize| k as f64 / (2 * m) as f64;
    let nodes: Vec<(usize, usize)> = (0..=m).flat_map(|i| (m - i..=m).map(move |j| (i, j))).collect();
    let points: Vec<ScanPoint> =
        nodes.par_iter().map(|&(i, j)| evaluate(step(i), step(j), spec)).collect::<Result<_>>()?;
    let minimizer = argmin(points.iter().map(|p| p.omega));
    let minimizer_corner = corner_of(points[minimizer].a2, points[minimizer].b2);
    Ok(TriangleScan { grid, points, minimizer, minimizer_corner })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "edge", rename_all = "kebab-case")]
pub enum Edge {
    /// `b2` fixed, `a2 ∈ [1/2 − b2, 1/2]`.
    Horizontal { b2: f64 },
    /// `a2 = t`, `b2 = 1/2 − t`, `t ∈ [0, 1/2]`.
    Hypotenuse,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdgeProfile {
    pub edge: Edge,
    pub points: Vec<ScanPoint>,
    /// Interior indices strictly below both neighbours.
    pub interior_minima: Vec<usize>,
    pub minimizer: usize,
}

pub fn edge_profile(edge: Edge, grid: usize, spec: &QuadratureSpec) -> Result<EdgeProfile> {
    if grid < 2 {
        return Err(Error::Domain(format!("grid must be at least 2, got {grid}")));
    }
    let m = (grid - 1) as f64;
    let coords: Vec<(f64, f64)> = match edge {
        Edge::Horizontal { b2 } => {
            if !(0.0..=0.5).contains(&b2) {
                return Err(Error::Domain(format!("b2 = {b2} outside [0, 1/2]")));
            }
            let lo = 0.5 - b2;
            (0..grid).map(|k| (lo + (0.5 - lo) * k as f64 / m, b2)).collect()
        }
        Edge::Hypotenuse => (0..grid).map(|k| (0.5 * k as f64 / m, 0.5 - 0.5 * k as f64 / m)).collect(),
    };
    let points: Vec<ScanPoint> = coords.par_iter().map(|&(a2, b2)| evaluate(a2, b2, spec)).collect::<Result<_>>()?;
    let interior_minima = (1..points.len().saturating_sub(1))
        .filter(|&k| points[k].omega < points[k - 1].omega && points[k].omega < points[k + 1].omega)
        .collect();
    let minimizer = argmin(points.iter().map(|p| p.omega));
    Ok(EdgeProfile { edge, points, interior_minima, minimizer })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_covers_triangle_with_corners() {
        let spec = QuadratureSpec::gauss(8);
        let s = triangle_scan(5, &spec).unwrap();
        assert_eq!(s.points.len(), 15);
        for (a2, b2) in [(0.5, 0.5), (0.0, 0.5), (0.5, 0.0)] {
            assert!(s.points.iter().any(|p| p.a2 == a2 && p.b2 == b2));
        }
        assert!(s.points.iter().all(|p| p.a2 + p.b2 >= 0.5 - 1e-15));
    }

    #[test]
    fn small_grids_are_rejected() {
        assert!(triangle_scan(1, &QuadratureSpec::default()).is_err());
        assert!(edge_profile(Edge::Horizontal { b2: 0.7 }, 5, &QuadratureSpec::default()).is_err());
    }

    #[test]
    fn hypotenuse_endpoints_agree() {
        let p = edge_profile(Edge::Hypotenuse, 3, &QuadratureSpec::default()).unwrap();
        let (first, mid, last) = (&p.points[0], &p.points[1], &p.points[2]);
        assert!((first.omega - last.omega).abs() < 1e-12);
        assert!(mid.omega > first.omega);
        assert!(p.interior_minima.is_empty());
    }
}
