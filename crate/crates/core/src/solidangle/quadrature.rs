//! Integration over the angle box `[0, π/2]^(n-1)`.
//!
//! All rules sum in a fixed order with compensated accumulation, so results
//! are bitwise independent of the rayon thread count.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};
use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use super::sphere::{param_into, surface_area};
use super::{Method, QuadratureResult, QuadratureSpec};
use crate::error::{Error, Result};

/// Neumaier-compensated running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::default();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, ascending nodes.
pub fn gauss_legendre(p: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(p >= 1);
    let mut nodes = vec![0.0; p];
    let mut weights = vec![0.0; p];
    let m = p.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (p as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=p {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            if p == 1 {
                p0 = 1.0;
                p1 = z;
            }
            dp = p as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        if p == 1 {
            z = 0.0;
            dp = 1.0;
        }
        nodes[i] = -z;
        nodes[p - 1 - i] = z;
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        weights[i] = w;
        weights[p - 1 - i] = w;
    }
    (nodes, weights)
}

/// A rule on one axis over `[lo, hi]`.
struct AxisRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl AxisRule {
    fn new(p: usize, lo: f64, hi: f64) -> Self {
        let (t, w) = gauss_legendre(p);
        let half = (hi - lo) / 2.0;
        Self {
            nodes: t.iter().map(|x| lo + half * (x + 1.0)).collect(),
            weights: w.iter().map(|x| x * half).collect(),
        }
    }
}

pub(crate) type Integrand<'a> = dyn Fn(&[f64]) -> f64 + Sync + 'a;

/// Tensor-product rule over the box `lo..hi` (one axis per angle), with the
/// spherical surface element folded in. Returns the sum and point count.
fn tensor_box(n: usize, p: usize, lo: &[f64], hi: &[f64], f: &Integrand) -> (f64, u64) {
    let d = n - 1;
    let rules: Vec<AxisRule> = (0..d).map(|k| AxisRule::new(p, lo[k], hi[k])).collect();
    let partials: Vec<f64> = (0..p)
        .into_par_iter()
        .map(|i0| {
            let mut acc = CompensatedSum::default();
            let mut idx = vec![0usize; d];
            idx[0] = i0;
            let mut angles = vec![0.0; d];
            let mut x = Vec::with_capacity(n);
            let mut jac = 0.0;
            loop {
                let mut w = 1.0;
                for k in 0..d {
                    angles[k] = rules[k].nodes[idx[k]];
                    w *= rules[k].weights[idx[k]];
                }
                param_into(&angles, &mut x, &mut jac);
                acc.add(w * jac * f(&x));
                // odometer over axes 1..d, last axis fastest
                let mut k = d;
                loop {
                    if k == 1 {
                        return acc.value();
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < p {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        })
        .collect();
    // d == 1: the odometer above returns after the first point of each i0
    let value: CompensatedSum = partials.into_iter().collect();
    (value.value(), (p as u64).pow(d as u32))
}

fn gauss_tensor(n: usize, spec: &QuadratureSpec, f: &Integrand) -> Result<QuadratureResult> {
    let d = (n - 1) as u32;
    let cost = |p: usize| (p as u64).pow(d) + ((p / 2).max(1) as u64).pow(d);
    let mut p = spec.points_for(n);
    let mut budget_limited = false;
    while cost(p) > spec.max_evaluations {
        if p <= 2 {
            return Err(Error::InvalidSpec(format!(
                "max-evaluations {} too small for a {n}-dimensional tensor rule",
                spec.max_evaluations
            )));
        }
        p -= 1;
        budget_limited = true;
    }
    let lo = vec![0.0; n - 1];
    let hi = vec![FRAC_PI_2; n - 1];
    let (fine, e1) = tensor_box(n, p, &lo, &hi, f);
    let (coarse, e2) = tensor_box(n, (p / 2).max(1), &lo, &hi, f);
    let error = (fine - coarse).abs();
    Ok(QuadratureResult {
        value: fine,
        error_estimate: error,
        evaluations: e1 + e2,
        method: Method::GaussTensor,
        converged: error <= spec.target_abs_error,
        budget_limited,
        ill_conditioned: false,
    })
}

/// Box in the adaptive scheme, ordered by error then by creation id.
struct Region {
    id: u64,
    lo: Vec<f64>,
    hi: Vec<f64>,
    value: f64,
    error: f64,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Region {}
impl PartialOrd for Region {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Region {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.id.cmp(&self.id))
    }
}

const ADAPTIVE_HIGH: usize = 8;
const ADAPTIVE_LOW: usize = 4;

fn adaptive(n: usize, spec: &QuadratureSpec, f: &Integrand) -> Result<QuadratureResult> {
    let d = (n - 1) as u32;
    let cost = (ADAPTIVE_HIGH as u64).pow(d) + (ADAPTIVE_LOW as u64).pow(d);
    if cost > spec.max_evaluations {
        return Err(Error::InvalidSpec(format!("max-evaluations {} below one adaptive cell", spec.max_evaluations)));
    }
    let eval_region = |id: u64, lo: Vec<f64>, hi: Vec<f64>| {
        let (v_hi, _) = tensor_box(n, ADAPTIVE_HIGH, &lo, &hi, f);
        let (v_lo, _) = tensor_box(n, ADAPTIVE_LOW, &lo, &hi, f);
        Region { id, lo, hi, value: v_hi, error: (v_hi - v_lo).abs() }
    };
    let mut next_id = 0u64;
    let mut evaluations = cost;
    let mut heap = BinaryHeap::new();
    heap.push(eval_region(next_id, vec![0.0; n - 1], vec![FRAC_PI_2; n - 1]));
    next_id += 1;
    let total_error = |h: &BinaryHeap<Region>| h.iter().map(|r| r.error).collect::<CompensatedSum>().value();
    let mut budget_limited = false;
    while total_error(&heap) > spec.target_abs_error {
        if evaluations + 2 * cost > spec.max_evaluations {
            budget_limited = true;
            break;
        }
        let worst = heap.pop().expect("non-empty");
        let axis = (0..worst.lo.len())
            .max_by(|&a, &b| {
                (worst.hi[a] - worst.lo[a]).total_cmp(&(worst.hi[b] - worst.lo[b])).then_with(|| b.cmp(&a))
            })
            .expect("at least one axis");
        let mid = 0.5 * (worst.lo[axis] + worst.hi[axis]);
        let mut left_hi = worst.hi.clone();
        left_hi[axis] = mid;
        let mut right_lo = worst.lo.clone();
        right_lo[axis] = mid;
        heap.push(eval_region(next_id, worst.lo.clone(), left_hi));
        heap.push(eval_region(next_id + 1, right_lo, worst.hi));
        next_id += 2;
        evaluations += 2 * cost;
    }
    let ordered: BTreeMap<u64, (f64, f64)> = heap.into_iter().map(|r| (r.id, (r.value, r.error))).collect();
    let value: CompensatedSum = ordered.values().map(|v| v.0).collect();
    let error: CompensatedSum = ordered.values().map(|v| v.1).collect();
    Ok(QuadratureResult {
        value: value.value(),
        error_estimate: error.value(),
        evaluations,
        method: Method::Adaptive,
        converged: error.value() <= spec.target_abs_error,
        budget_limited,
        ill_conditioned: false,
    })
}

pub(crate) const MC_CHUNK: u64 = 1 << 16;

/// Uniform directions on the orthant patch from absolute Gaussian vectors.
fn monte_carlo(n: usize, spec: &QuadratureSpec, f: &Integrand) -> Result<QuadratureResult> {
    let samples = spec.max_evaluations;
    if samples < 2 {
        return Err(Error::InvalidSpec("monte carlo needs at least two samples".into()));
    }
    let chunks = samples.div_ceil(MC_CHUNK);
    let partials: Vec<(f64, f64)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            rng.set_stream(c);
            let count = MC_CHUNK.min(samples - c * MC_CHUNK);
            let mut s1 = CompensatedSum::default();
            let mut s2 = CompensatedSum::default();
            let mut x = vec![0.0; n];
            for _ in 0..count {
                let mut norm = 0.0;
                for v in x.iter_mut() {
                    let g: f64 = rng.sample(StandardNormal);
                    *v = g.abs();
                    norm += g * g;
                }
                let inv = norm.sqrt().recip();
                x.iter_mut().for_each(|v| *v *= inv);
                let y = f(&x);
                s1.add(y);
                s2.add(y * y);
            }
            (s1.value(), s2.value())
        })
        .collect();
    let s1: CompensatedSum = partials.iter().map(|p| p.0).collect();
    let s2: CompensatedSum = partials.iter().map(|p| p.1).collect();
    let m = samples as f64;
    let mean = s1.value() / m;
    let var = ((s2.value() / m - mean * mean) * m / (m - 1.0)).max(0.0);
    let patch = surface_area(n) / 2f64.powi(n as i32);
    let error = patch * (var / m).sqrt();
    Ok(QuadratureResult {
        value: patch * mean,
        error_estimate: error,
        evaluations: samples,
        method: Method::MonteCarlo,
        converged: error <= spec.target_abs_error,
        budget_limited: false,
        ill_conditioned: false,
    })
}

/// `∫_S f(x) ds` over the positive orthant patch of `S^(n-1)`.
pub(crate) fn integrate_orthant(n: usize, spec: &QuadratureSpec, f: &Integrand) -> Result<QuadratureResult> {
    spec.validate()?;
    match spec.method {
        Method::GaussTensor => gauss_tensor(n, spec, f),
        Method::Adaptive => adaptive(n, spec, f),
        Method::MonteCarlo => monte_carlo(n, spec, f),
        Method::ClosedForm => Err(Error::InvalidSpec("closed-form is a result tag, not a method".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_nodes_integrate_polynomials_exactly() {
        for p in [1, 2, 3, 5, 8, 24, 48] {
            let (t, w) = gauss_legendre(p);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-13, "p={p}");
            for deg in 0..(2 * p) {
                let got: f64 = t.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let want = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((got - want).abs() < 1e-12, "p={p} deg={deg}");
            }
            assert!(t.windows(2).all(|v| v[0] < v[1]));
        }
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let s: CompensatedSum = [1e16, 1.0, -1e16, 1.0].into_iter().collect();
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    fn constant_integrand_gives_orthant_patch_area() {
        let spec = QuadratureSpec::default();
        for n in 2..=5 {
            let r = integrate_orthant(n, &spec, &|_| 1.0).unwrap();
            let want = surface_area(n) / 2f64.powi(n as i32);
            assert!((r.value - want).abs() < 1e-12, "n={n}");
            assert!(r.converged);
        }
    }

    #[test]
    fn adaptive_matches_tensor() {
        let spec = QuadratureSpec { method: Method::Adaptive, target_abs_error: 1e-10, ..Default::default() };
        let f = |x: &[f64]| (1.0 + x[0] * x[1] + x[1] * x[2]).powf(-1.5);
        let a = integrate_orthant(3, &spec, &f).unwrap();
        let g = integrate_orthant(3, &QuadratureSpec::default(), &f).unwrap();
        assert!(a.converged);
        assert!((a.value - g.value).abs() < 1e-9);
    }

    #[test]
    fn monte_carlo_is_reproducible() {
        let spec = QuadratureSpec { method: Method::MonteCarlo, max_evaluations: 200_000, seed: 7, ..Default::default() };
        let f = |x: &[f64]| x[0] * x[0];
        let a = integrate_orthant(3, &spec, &f).unwrap();
        let b = integrate_orthant(3, &spec, &f).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        // ∫ x1² over the octant = (4π/3)/8
        assert!((a.value - std::f64::consts::PI / 6.0).abs() < 4.0 * a.error_estimate);
    }

    #[test]
    fn tensor_result_is_thread_count_independent() {
        let f = |x: &[f64]| (1.0 + x[0] * x[3] + 0.3 * x[1] * x[2]).powi(-2);
        let spec = QuadratureSpec::default();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| integrate_orthant(4, &spec, &f).unwrap());
        let b = four.install(|| integrate_orthant(4, &spec, &f).unwrap());
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.error_estimate.to_bits(), b.error_estimate.to_bits());
    }

    #[test]
    fn budget_shrinks_tensor_rule() {
        let spec = QuadratureSpec { max_evaluations: 1000, ..Default::default() };
        let r = integrate_orthant(4, &spec, &|_| 1.0).unwrap();
        assert!(r.evaluations <= 1000);
        assert!(r.budget_limited);
        let tiny = QuadratureSpec { max_evaluations: 3, ..Default::default() };
        assert!(integrate_orthant(4, &tiny, &|_| 1.0).is_err());
    }
}
