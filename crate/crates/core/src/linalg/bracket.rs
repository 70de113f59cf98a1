//! Text encodings of symmetric matrices.
//!
//! Bracket form lists the upper triangle row by row: `[a, d, e; b, f; c]`
//! is the matrix with diagonal `a, b, c` and off-diagonal `q12 = d`,
//! `q13 = e`, `q23 = f`. Entries are integers, fractions `p/q` or decimals;
//! all of them are read exactly.
//!
//! JSON form: `{"n": 3, "upper": [["1", "1/2", "1/2"], ["1", "1/2"], ["1"]]}`.
//! Entries may be JSON numbers (read as the exact value of the `f64`) or
//! strings in the bracket entry syntax.

use serde::{Deserialize, Serialize};

use super::exact::{format_rational, parse_rational, rational_from_f64, Rational};
use super::matrix::SymMatrix;
use crate::error::{Error, Result};

pub fn parse_bracket(text: &str) -> Result<SymMatrix> {
    let s = text.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("bracket form must look like [r1; r2; ...], got {s:?}")))?;
    let rows: Vec<Vec<Rational>> = inner
        .split(';')
        .map(|row| row.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n - i {
            return Err(Error::Parse(format!(
                "row {} of a {n}×{n} bracket form needs {} entries, found {}",
                i + 1,
                n - i,
                row.len()
            )));
        }
    }
    SymMatrix::from_upper_rows_exact(&rows)
}

fn upper_rows<T: Clone>(n: usize, packed: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::with_capacity(n);
    let mut k = 0;
    for i in 0..n {
        out.push(packed[k..k + n - i].to_vec());
        k += n - i;
    }
    out
}

/// Renders exact matrices with fractions and float matrices with the
/// shortest round-tripping decimal.
pub fn render_bracket(m: &SymMatrix) -> String {
    let n = m.dim();
    let rows: Vec<String> = match m.exact_upper() {
        Some(e) => upper_rows(n, e).iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(",")).collect(),
        None => upper_rows(n, m.upper()).iter().map(|r| r.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(",")).collect(),
    };
    format!("[{}]", rows.join(";"))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonEntry {
    Number(f64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub n: usize,
    pub upper: Vec<Vec<JsonEntry>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &SymMatrix) -> Self {
        let n = m.dim();
        let upper = match m.exact_upper() {
            Some(e) => upper_rows(n, e).into_iter().map(|r| r.iter().map(|x| JsonEntry::Text(format_rational(x))).collect()).collect(),
            None => upper_rows(n, m.upper()).into_iter().map(|r| r.into_iter().map(JsonEntry::Number).collect()).collect(),
        };
        Self { n, upper }
    }

    pub fn to_matrix(&self) -> Result<SymMatrix> {
        if self.upper.len() != self.n {
            return Err(Error::Parse(format!("\"upper\" has {} rows, expected n = {}", self.upper.len(), self.n)));
        }
        let rows = self
            .upper
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        JsonEntry::Number(x) => {
                            rational_from_f64(*x).ok_or_else(|| Error::Parse(format!("non-finite entry {x}")))
                        }
                        JsonEntry::Text(t) => parse_rational(t),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SymMatrix::from_upper_rows_exact(&rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn parse_matrix_json(text: &str) -> Result<SymMatrix> {
    let j: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    j.to_matrix()
}

pub fn render_json(m: &SymMatrix) -> String {
    serde_json::to_string(&MatrixJson::from_matrix(m)).expect("matrix JSON serializes")
}

/// Bracket form or JSON object, chosen by the first non-blank character.
pub fn parse_matrix(text: &str) -> Result<SymMatrix> {
    match text.trim_start().chars().next() {
        Some('{') => parse_matrix_json(text),
        Some('[') => parse_bracket(text),
        _ => Err(Error::Parse("expected a bracket form `[..]` or a JSON object `{..}`".into())),
    }
}
