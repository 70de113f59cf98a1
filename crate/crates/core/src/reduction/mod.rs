//! Minkowski reduction conditions in ranks 2 to 4.
//!
//! A form is reduced when every condition of [`reduction_conditions`] has
//! nonnegative slack. Rational input is decided exactly; float input uses the
//! tolerance `1e-9 · max q_ii` unless one is given.

mod conditions;
mod rescale;

use num::{Signed, Zero};
use serde::Serialize;

pub use conditions::{
    is_second_type_shape, reduction_conditions, simplified_conditions_4d, ConditionKind, Inequality,
    ReductionCondition, Term,
};
pub use rescale::{sign_flip_min, wr_normalize, SignFlipResult};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, to_f64, Rational, SymMatrix};

/// Relative slack tolerance for float input.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionSlack {
    pub condition: ReductionCondition,
    pub slack: f64,
    /// Exact slack as a fraction string when decided exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_slack: Option<String>,
    pub active: bool,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub exact: bool,
    pub tolerance: f64,
    pub is_reduced: bool,
    pub conditions: Vec<ConditionSlack>,
    /// Labels of conditions with `|slack| ≤ tolerance`.
    pub active: Vec<String>,
    /// Labels of conditions with `slack < −tolerance`.
    pub violated: Vec<String>,
}

impl ReductionReport {
    pub fn active_conditions(&self) -> impl Iterator<Item = &ConditionSlack> {
        self.conditions.iter().filter(|c| c.active)
    }

    pub fn violated_conditions(&self) -> impl Iterator<Item = &ConditionSlack> {
        self.conditions.iter().filter(|c| !c.satisfied)
    }

    pub fn slack(&self, label: &str) -> Option<f64> {
        self.conditions.iter().find(|c| c.condition.label == label).map(|c| c.slack)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Evaluate `conditions` on `q`.
///
/// `tol = None` decides rational input exactly and float input with
/// `1e-9 · max q_ii`; `Some(0.0)` also decides rational input exactly.
pub fn evaluate(q: &SymMatrix, conditions: Vec<ReductionCondition>, tol: Option<f64>) -> Result<ReductionReport> {
    let n = q.dim();
    if let Some(t) = tol {
        if !(t >= 0.0) {
            return Err(Error::Domain(format!("tolerance must be nonnegative, got {t}")));
        }
    }
    let exact = q.is_exact() && tol.is_none_or(|t| t == 0.0);
    let tolerance = if exact { 0.0 } else { tol.unwrap_or(DEFAULT_REL_TOL * q.max_diagonal().abs()) };
    let mut rows = Vec::with_capacity(conditions.len());
    for condition in conditions {
        if condition.max_index() >= n {
            return Err(Error::DimensionMismatch { expected: condition.max_index() + 1, found: n });
        }
        let terms = condition.terms();
        let row = if exact {
            let s: Rational =
                terms.iter().map(|t| Rational::from_integer(t.coeff.into()) * q.exact_entry(t.i, t.j).unwrap()).sum();
            ConditionSlack {
                slack: to_f64(&s),
                exact_slack: Some(format_rational(&s)),
                active: s.is_zero(),
                satisfied: !s.is_negative(),
                condition,
            }
        } else {
            let s: f64 = terms.iter().map(|t| t.coeff as f64 * q.get(t.i, t.j)).sum();
            ConditionSlack { slack: s, exact_slack: None, active: s.abs() <= tolerance, satisfied: s >= -tolerance, condition }
        };
        rows.push(row);
    }
    let is_reduced = rows.iter().all(|r| r.satisfied);
    let active = rows.iter().filter(|r| r.active).map(|r| r.condition.label.clone()).collect();
    let violated = rows.iter().filter(|r| !r.satisfied).map(|r| r.condition.label.clone()).collect();
    Ok(ReductionReport { n, exact, tolerance, is_reduced, conditions: rows, active, violated })
}

/// Full condition system for `2 ≤ n ≤ 4`; larger `n` is refused.
pub fn check_reduced(q: &SymMatrix, tol: Option<f64>) -> Result<ReductionReport> {
    let n = q.dim();
    if n >= 5 {
        return Err(Error::UnsupportedDimension { n, context: "reduction check (conditions are known for n ≤ 4)" });
    }
    evaluate(q, reduction_conditions(n)?, tol)
}

/// The 18-condition rearranged system for rank-4 forms whose off-diagonal
/// entries are all nonnegative.
pub fn check_reduced_simplified_4d(q: &SymMatrix, tol: Option<f64>) -> Result<ReductionReport> {
    if q.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: q.dim() });
    }
    if let Some((i, j)) = negative_offdiagonal(q) {
        return Err(Error::Domain(format!(
            "q{}{} < 0; the simplified system needs nonnegative off-diagonals, use check_reduced",
            i + 1,
            j + 1
        )));
    }
    evaluate(q, simplified_conditions_4d(), tol)
}

fn negative_offdiagonal(q: &SymMatrix) -> Option<(usize, usize)> {
    let n = q.dim();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| match q.exact_entry(i, j) {
        Some(e) => e.is_negative(),
        None => q.get(i, j) < 0.0,
    })
}

/// Conditions holding with equality.
pub fn active_facets(q: &SymMatrix, tol: Option<f64>) -> Result<Vec<ReductionCondition>> {
    Ok(check_reduced(q, tol)?.conditions.into_iter().filter(|c| c.active).map(|c| c.condition).collect())
}
