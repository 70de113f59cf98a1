use rayon::prelude::*;
use serde::Serialize;

use super::check_reduced_simplified_4d;
use crate::error::{Error, Result};
use crate::linalg::{gram_from_basis, BasisMatrix, GramMatrix, Rational, SymMatrix};
use crate::solidangle::{solid_angle, QuadratureSpec, SolidAngle};

const STEP_TOL: f64 = 1e-12;

/// Rescale a reduced rank-4 form with nonnegative off-diagonals to unit
/// diagonal, in the order `v4 → |v3|`, `v1 → |v2|`, then `v1, v2 → |v3|`,
/// checking the nonnegative system after every step.
pub fn wr_normalize(q: &GramMatrix) -> Result<GramMatrix> {
    let pre = check_reduced_simplified_4d(q.as_sym(), None)?;
    if !pre.is_reduced {
        return Err(Error::NotReduced(pre.violated.join(", ")));
    }
    if let Some(e) = q.exact_upper() {
        let d = q.exact_entry(0, 0).unwrap();
        if (1..4).all(|i| q.exact_entry(i, i).unwrap() == d) {
            let upper: Vec<Rational> = e.iter().map(|x| x / d).collect();
            return GramMatrix::new(SymMatrix::from_upper_exact(4, upper)?);
        }
    }
    let (a, b, c, d) = (q.get(0, 0), q.get(1, 1), q.get(2, 2), q.get(3, 3));
    let steps: [[f64; 4]; 3] = [
        [1.0, 1.0, 1.0, (c / d).sqrt()],
        [(b / a).sqrt(), 1.0, 1.0, 1.0],
        [(c / b).sqrt(), (c / b).sqrt(), 1.0, 1.0],
    ];
    let mut m = q.as_sym().clone().into_float();
    for (k, s) in steps.iter().enumerate() {
        m = m.diagonal_congruence(s)?;
        let r = check_reduced_simplified_4d(&m, Some(STEP_TOL * m.max_diagonal()))?;
        if !r.is_reduced {
            return Err(Error::NotReduced(format!("after rescaling step {}: {}", k + 1, r.violated.join(", "))));
        }
    }
    let unit = 1.0 / m.get(2, 2).sqrt();
    m = m.diagonal_congruence(&[unit; 4])?;
    let m = SymMatrix::from_fn(4, |i, j| if i == j { 1.0 } else { m.get(i, j) })?;
    GramMatrix::new(m)
}

#[derive(Clone, Debug, Serialize)]
pub struct SignFlipResult {
    pub signs: Vec<i8>,
    pub solid_angle: SolidAngle,
    /// All `2^(n-1)` classes with their `ω`, in lexicographic sign order.
    pub candidates: Vec<(Vec<i8>, f64)>,
}

/// Sign vector for class `mask`; `s_1 = +1`, and `mask` order is the
/// lexicographic order of sign vectors with `+` before `−`.
fn signs_for(n: usize, mask: usize) -> Vec<i8> {
    (0..n).map(|j| if j > 0 && (mask >> (n - 1 - j)) & 1 == 1 { -1 } else { 1 }).collect()
}

/// Minimize `ω` over the cones spanned by `±v_1, …, ±v_n` up to global sign.
pub fn sign_flip_min(basis: &BasisMatrix, spec: &QuadratureSpec) -> Result<SignFlipResult> {
    let n = basis.dim();
    if n > 5 {
        return Err(Error::UnsupportedDimension { n, context: "sign-flip search (n ≤ 5)" });
    }
    let q = gram_from_basis(basis)?;
    let evaluated: Vec<(Vec<i8>, SolidAngle)> = (0..1usize << (n - 1))
        .into_par_iter()
        .map(|mask| {
            let signs = signs_for(n, mask);
            let qs = GramMatrix::new(q.sign_congruence(&signs)?)?;
            Ok((signs, solid_angle(&qs, spec)?))
        })
        .collect::<Result<_>>()?;
    let best = evaluated
        .iter()
        .enumerate()
        .min_by(|(i, x), (j, y)| x.1.omega.total_cmp(&y.1.omega).then(i.cmp(j)))
        .map(|(i, _)| i)
        .expect("at least one class");
    let candidates = evaluated.iter().map(|(s, w)| (s.clone(), w.omega)).collect();
    let (signs, solid_angle) = evaluated.into_iter().nth(best).unwrap();
    Ok(SignFlipResult { signs, solid_angle, candidates })
}
