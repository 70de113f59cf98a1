use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionKind {
    /// Diagonal ordering `q_ii ≤ q_jj`.
    FirstType,
    /// `xᵀQx ≥ q_ii` for a small integer vector `x`.
    SecondType,
    /// Sign bound `q_ij ≥ 0` of the nonnegative rank-4 system.
    Sign,
}

/// `coeff · q_ij` with `i ≤ j` (0-based), counting each off-diagonal once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub i: usize,
    pub j: usize,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum Inequality {
    /// `q_lo,lo ≤ q_hi,hi`.
    Ordering { lo: usize, hi: usize },
    /// `xᵀQx ≥ q_index,index`.
    Vector { coefficients: Vec<i8>, index: usize },
    /// `Σ terms ≥ 0`.
    Linear { terms: Vec<Term> },
}

/// One linear inequality on the entries of `Q`, written as `slack ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionCondition {
    pub label: String,
    pub kind: ConditionKind,
    #[serde(flatten)]
    pub inequality: Inequality,
}

impl ReductionCondition {
    pub fn ordering(lo: usize, hi: usize) -> Self {
        Self {
            label: format!("|v{}| <= |v{}|", lo + 1, hi + 1),
            kind: ConditionKind::FirstType,
            inequality: Inequality::Ordering { lo, hi },
        }
    }

    /// Panics unless `x` has the second-type shape: `x_index = 1`, entries in
    /// `{0, ±1}` before it with at least one nonzero, zeros after it.
    pub fn vector(coefficients: Vec<i8>, index: usize) -> Self {
        assert!(is_second_type_shape(&coefficients, index), "bad second-type vector {coefficients:?}");
        Self { label: vector_label(&coefficients, index), kind: ConditionKind::SecondType, inequality: Inequality::Vector { coefficients, index } }
    }

    pub fn linear(label: impl Into<String>, kind: ConditionKind, terms: Vec<Term>) -> Self {
        Self { label: label.into(), kind, inequality: Inequality::Linear { terms } }
    }

    /// The slack as a linear functional in the upper-triangle entries.
    pub fn terms(&self) -> Vec<Term> {
        match &self.inequality {
            Inequality::Ordering { lo, hi } => {
                vec![Term { i: *hi, j: *hi, coeff: 1 }, Term { i: *lo, j: *lo, coeff: -1 }]
            }
            Inequality::Vector { coefficients: x, index } => {
                let mut out = Vec::new();
                for i in 0..x.len() {
                    for j in i..x.len() {
                        let mut c = i64::from(x[i]) * i64::from(x[j]);
                        if i != j {
                            c *= 2;
                        } else if i == *index {
                            c -= 1;
                        }
                        if c != 0 {
                            out.push(Term { i, j, coeff: c });
                        }
                    }
                }
                out
            }
            Inequality::Linear { terms } => terms.clone(),
        }
    }

    /// Whether the functional has a nonzero `q_ij` (`i ≠ j`) term with
    /// `index` among `i, j`.
    pub fn involves_offdiagonal(&self, index: usize) -> bool {
        self.terms().iter().any(|t| t.i != t.j && (t.i == index || t.j == index))
    }

    /// Largest index touched, so `dim > max_index` is required.
    pub fn max_index(&self) -> usize {
        self.terms().iter().map(|t| t.j).max().unwrap_or(0)
    }
}

pub fn is_second_type_shape(x: &[i8], index: usize) -> bool {
    index < x.len()
        && x[index] == 1
        && x[..index].iter().all(|v| (-1..=1).contains(v))
        && x[..index].iter().any(|&v| v != 0)
        && x[index + 1..].iter().all(|&v| v == 0)
}

fn vector_label(x: &[i8], index: usize) -> String {
    let mut s = format!("|v{}", index + 1);
    for (j, &c) in x[..index].iter().enumerate() {
        match c {
            1 => s.push_str(&format!(" + v{}", j + 1)),
            -1 => s.push_str(&format!(" - v{}", j + 1)),
            _ => {}
        }
    }
    format!("{s}| >= |v{}|", index + 1)
}

/// Orderings `q11 ≤ q22 ≤ …` followed by every second-type vector, grouped by
/// `index` and enumerated with `x_1` varying slowest over `(0, 1, −1)`.
///
/// Counts: 1 + 2 for `n = 2`, 2 + 10 for `n = 3`, 3 + 36 for `n = 4`.
pub fn reduction_conditions(n: usize) -> Result<Vec<ReductionCondition>> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedDimension { n, context: "reduction conditions (2 ≤ n ≤ 4)" });
    }
    let mut out: Vec<ReductionCondition> = (0..n - 1).map(|i| ReductionCondition::ordering(i, i + 1)).collect();
    for index in 1..n {
        let total = 3usize.pow(index as u32);
        for code in 0..total {
            let mut x = vec![0i8; n];
            let mut c = code;
            for j in (0..index).rev() {
                x[j] = [0, 1, -1][c % 3];
                c /= 3;
            }
            x[index] = 1;
            if x[..index].iter().any(|&v| v != 0) {
                out.push(ReductionCondition::vector(x, index));
            }
        }
    }
    Ok(out)
}

const RANK4_LABELS: [[&str; 4]; 4] =
    [["a", "a1", "a2", "a3"], ["a1", "b", "b1", "b2"], ["a2", "b1", "c", "c1"], ["a3", "b2", "c1", "d"]];

/// The rearranged system for rank-4 forms with nonnegative off-diagonals:
/// orderings `a ≤ b ≤ c ≤ d`, bounds `0 ≤ q_ij ≤ q_ii/2` (`i < j`) and the
/// three pair-grouped inequalities over the pairs `(a1, c1)`, `(a2, b2)`,
/// `(a3, b1)`.
pub fn simplified_conditions_4d() -> Vec<ReductionCondition> {
    let mut out: Vec<ReductionCondition> = (0..3).map(|i| ReductionCondition::ordering(i, i + 1)).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            out.push(ReductionCondition::linear(
                format!("{} >= 0", RANK4_LABELS[i][j]),
                ConditionKind::Sign,
                vec![Term { i, j, coeff: 1 }],
            ));
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let mut x = vec![0i8; 4];
            x[i] = -1;
            x[j] = 1;
            let mut c = ReductionCondition::vector(x, j);
            c.label = format!("{} <= {}/2", RANK4_LABELS[i][j], RANK4_LABELS[i][i]);
            out.push(c);
        }
    }
    let pairs = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    for (k, plus) in pairs.iter().enumerate() {
        let mut terms: Vec<Term> = (0..3).map(|i| Term { i, j: i, coeff: 1 }).collect();
        for i in 0..4 {
            for j in i + 1..4 {
                let coeff = if plus.contains(&(i, j)) { 2 } else { -2 };
                terms.push(Term { i, j, coeff });
            }
        }
        let p = |t: (usize, usize)| RANK4_LABELS[t.0][t.1];
        let minus: Vec<&str> = pairs
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .flat_map(|(_, q)| q.iter().map(|&t| p(t)))
            .collect();
        let label = format!("a+b+c + 2({}+{}) - 2({}) >= 0", p(plus[0]), p(plus[1]), minus.join("+"));
        out.push(ReductionCondition::linear(label, ConditionKind::SecondType, terms));
    }
    out
}
