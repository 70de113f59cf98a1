use serde::Serialize;

use super::exact::{rational_determinant, rational_from_f64, sign_of, to_f64, Rational};
use crate::error::{Error, Result};
use num::bigint::Sign;

/// Largest supported dimension.
pub const MAX_DIM: usize = 8;

/// Relative tolerance on leading minors, `minor_k > PD_TOL * scale^k`.
const PD_TOL: f64 = 1e-12;

fn packed_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + j
}

fn packed_len(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Symmetric `n × n` matrix stored as its packed upper triangle (row-major).
///
/// No definiteness is assumed; see [`GramMatrix`] for the validated form.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    upper: Vec<f64>,
    exact: Option<Vec<Rational>>,
}

/// Outcome of the leading-minor test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Definiteness {
    PositiveDefinite,
    /// Leading minor `minor` (1-based) is negative, or exactly zero for exact input.
    NotPositiveDefinite { minor: usize },
    /// Leading minor `minor` lies within tolerance of zero.
    Indeterminate { minor: usize },
}

impl SymMatrix {
    fn check_dim(n: usize) -> Result<()> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::UnsupportedDimension { n, context: "symmetric matrix" });
        }
        Ok(())
    }

    /// From the packed upper triangle `q11, q12, .., q1n, q22, .., qnn`.
    pub fn from_upper(n: usize, upper: Vec<f64>) -> Result<Self> {
        Self::check_dim(n)?;
        if upper.len() != packed_len(n) {
            return Err(Error::DimensionMismatch { expected: packed_len(n), found: upper.len() });
        }
        if upper.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite matrix entry".into()));
        }
        Ok(Self { n, upper, exact: None })
    }

    pub fn from_upper_exact(n: usize, upper: Vec<Rational>) -> Result<Self> {
        Self::check_dim(n)?;
        if upper.len() != packed_len(n) {
            return Err(Error::DimensionMismatch { expected: packed_len(n), found: upper.len() });
        }
        let floats = upper.iter().map(to_f64).collect();
        Ok(Self { n, upper: floats, exact: Some(upper) })
    }

    /// Rows of the upper triangle: row `i` holds `q_ii, .., q_in`.
    pub fn from_upper_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        Self::check_ragged(rows.iter().map(Vec::len), n)?;
        Self::from_upper(n, rows.concat())
    }

    pub fn from_upper_rows_exact(rows: &[Vec<Rational>]) -> Result<Self> {
        let n = rows.len();
        Self::check_ragged(rows.iter().map(Vec::len), n)?;
        Self::from_upper_exact(n, rows.concat())
    }

    fn check_ragged(lens: impl Iterator<Item = usize>, n: usize) -> Result<()> {
        for (i, len) in lens.enumerate() {
            if len != n - i {
                return Err(Error::DimensionMismatch { expected: n - i, found: len });
            }
        }
        Ok(())
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Result<Self> {
        let mut upper = Vec::with_capacity(packed_len(n));
        for i in 0..n {
            for j in i..n {
                upper.push(f(i, j));
            }
        }
        Self::from_upper(n, upper)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::diagonal_exact(&vec![Rational::from_integer(1.into()); n])
    }

    pub fn diagonal(d: &[f64]) -> Result<Self> {
        Self::from_fn(d.len(), |i, j| if i == j { d[i] } else { 0.0 })
    }

    pub fn diagonal_exact(d: &[Rational]) -> Result<Self> {
        let n = d.len();
        let mut upper = Vec::with_capacity(packed_len(n));
        for i in 0..n {
            for j in i..n {
                upper.push(if i == j { d[i].clone() } else { Rational::from_integer(0.into()) });
            }
        }
        Self::from_upper_exact(n, upper)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.upper[packed_index(self.n, i, j)]
    }

    pub fn exact_entry(&self, i: usize, j: usize) -> Option<&Rational> {
        self.exact.as_ref().map(|e| &e[packed_index(self.n, i, j)])
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn exact_upper(&self) -> Option<&[Rational]> {
        self.exact.as_deref()
    }

    /// Drops the exact representation.
    pub fn into_float(mut self) -> Self {
        self.exact = None;
        self
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn to_dense_exact(&self) -> Option<Vec<Vec<Rational>>> {
        self.exact.as_ref()?;
        Some(
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self.exact_entry(i, j).unwrap().clone()).collect())
                .collect(),
        )
    }

    pub fn max_diagonal(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).fold(f64::MIN, f64::max)
    }

    /// `Σ q_ij x_i x_j`.
    pub fn quadratic_form(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        Ok(self.quadratic_form_unchecked(x))
    }

    pub(crate) fn quadratic_form_unchecked(&self, x: &[f64]) -> f64 {
        let n = self.n;
        let mut acc = 0.0;
        let mut k = 0;
        for i in 0..n {
            acc += self.upper[k] * x[i] * x[i];
            k += 1;
            let mut row = 0.0;
            for j in i + 1..n {
                row += self.upper[k] * x[j];
                k += 1;
            }
            acc += 2.0 * x[i] * row;
        }
        acc
    }

    /// `S Q S` for the diagonal matrix `S = diag(s)`.
    pub fn diagonal_congruence(&self, s: &[f64]) -> Result<Self> {
        if s.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: s.len() });
        }
        Self::from_fn(self.n, |i, j| s[i] * s[j] * self.get(i, j))
    }

    /// `S Q S` with `S = diag(±1)`, exact entries preserved.
    pub fn sign_congruence(&self, signs: &[i8]) -> Result<Self> {
        if signs.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: signs.len() });
        }
        let flip = |i: usize, j: usize| signs[i] * signs[j] < 0;
        let mut out = self.clone();
        let mut k = 0;
        for i in 0..self.n {
            for j in i..self.n {
                if flip(i, j) {
                    out.upper[k] = -out.upper[k];
                    if let Some(e) = out.exact.as_mut() {
                        e[k] = -e[k].clone();
                    }
                }
                k += 1;
            }
        }
        Ok(out)
    }

    /// Pivots of the symmetric `L D Lᵀ` factorization without pivoting.
    /// Stops after the first non-positive pivot.
    fn ldl_pivots(&self) -> Vec<f64> {
        let n = self.n;
        let a = self.to_dense();
        let mut l = vec![vec![0.0; n]; n];
        let mut d = Vec::with_capacity(n);
        for j in 0..n {
            let mut dj = a[j][j];
            for k in 0..j {
                dj -= l[j][k] * l[j][k] * d[k];
            }
            d.push(dj);
            if dj <= 0.0 {
                break;
            }
            #[allow(clippy::needless_range_loop)]
            for i in j + 1..n {
                let mut v = a[i][j];
                for k in 0..j {
                    v -= l[i][k] * l[j][k] * d[k];
                }
                l[i][j] = v / dj;
            }
        }
        d
    }

    /// Determinant: exact when rational entries are present, otherwise
    /// `L D Lᵀ` for positive definite input with a pivoted-LU fallback.
    pub fn determinant(&self) -> f64 {
        if let Some(det) = self.exact_determinant() {
            return to_f64(&det);
        }
        let d = self.ldl_pivots();
        if d.len() == self.n && d.iter().all(|&p| p > 0.0) {
            return d.iter().product();
        }
        lu_determinant(self.to_dense())
    }

    /// Float determinant ignoring any exact entries.
    pub fn float_determinant(&self) -> f64 {
        let d = self.ldl_pivots();
        if d.len() == self.n && d.iter().all(|&p| p > 0.0) {
            return d.iter().product();
        }
        lu_determinant(self.to_dense())
    }

    pub fn exact_determinant(&self) -> Option<Rational> {
        self.to_dense_exact().map(|rows| rational_determinant(&rows))
    }

    /// Leading-minor test. Exact input decides exactly; float input uses
    /// `minor_k > 1e-12 · (max q_ii)^k`.
    pub fn definiteness(&self) -> Definiteness {
        if let Some(rows) = self.to_dense_exact() {
            for k in 1..=self.n {
                let sub: Vec<Vec<Rational>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
                match sign_of(&rational_determinant(&sub)) {
                    Sign::Plus => {}
                    _ => return Definiteness::NotPositiveDefinite { minor: k },
                }
            }
            return Definiteness::PositiveDefinite;
        }
        let scale = self.max_diagonal().abs().max(f64::MIN_POSITIVE);
        let d = self.ldl_pivots();
        let mut minor = 1.0;
        for (k, &p) in d.iter().enumerate() {
            minor *= p;
            let tol = PD_TOL * scale.powi(k as i32 + 1);
            if minor.abs() <= tol {
                return Definiteness::Indeterminate { minor: k + 1 };
            }
            if minor < 0.0 {
                return Definiteness::NotPositiveDefinite { minor: k + 1 };
            }
        }
        Definiteness::PositiveDefinite
    }

    pub fn is_positive_definite(&self) -> bool {
        self.definiteness() == Definiteness::PositiveDefinite
    }

    /// Eigenvalues in ascending order (cyclic Jacobi; `n ≤ 8`).
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = self.to_dense();
        for _sweep in 0..100 {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[i][j] * a[i][j])
                .sum();
            let total: f64 = a.iter().flatten().map(|x| x * x).sum();
            if off <= 1e-30 * total.max(f64::MIN_POSITIVE) {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    if a[p][q] == 0.0 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[k][p];
                        let akq = a[k][q];
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[p][k];
                        let aqk = a[q][k];
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Labels `[a, d, e; b, f; c]` for `n = 3`.
    pub fn labels3(&self) -> Option<Labels3> {
        (self.n == 3).then(|| Labels3 {
            a: self.get(0, 0),
            b: self.get(1, 1),
            c: self.get(2, 2),
            d: self.get(0, 1),
            e: self.get(0, 2),
            f: self.get(1, 2),
        })
    }

    /// Labels `[a, a1, a2, a3; b, b1, b2; c, c1; d]` for `n = 4`.
    pub fn labels4(&self) -> Option<Labels4> {
        (self.n == 4).then(|| Labels4 {
            a: self.get(0, 0),
            a1: self.get(0, 1),
            a2: self.get(0, 2),
            a3: self.get(0, 3),
            b: self.get(1, 1),
            b1: self.get(1, 2),
            b2: self.get(1, 3),
            c: self.get(2, 2),
            c1: self.get(2, 3),
            d: self.get(3, 3),
        })
    }
}

fn lu_determinant(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n).max_by(|&x, &y| a[x][k].abs().total_cmp(&a[y][k].abs())).unwrap();
        if a[p][k] == 0.0 {
            return 0.0;
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    det
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Labels3 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Labels4 {
    pub a: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub b: f64,
    pub b1: f64,
    pub b2: f64,
    pub c: f64,
    pub c1: f64,
    pub d: f64,
}

/// A symmetric positive definite matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix(SymMatrix);

impl GramMatrix {
    pub fn new(m: SymMatrix) -> Result<Self> {
        match m.definiteness() {
            Definiteness::PositiveDefinite => Ok(Self(m)),
            Definiteness::NotPositiveDefinite { minor } => {
                let value = leading_minor(&m, minor);
                Err(Error::NotPositiveDefinite { minor, value })
            }
            Definiteness::Indeterminate { minor } => Err(Error::IndeterminateDefiniteness { minor }),
        }
    }

    pub fn from_upper_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(SymMatrix::from_upper_rows(rows)?)
    }

    pub fn from_upper_rows_exact(rows: &[Vec<Rational>]) -> Result<Self> {
        Self::new(SymMatrix::from_upper_rows_exact(rows)?)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(SymMatrix::identity(n)?)
    }

    pub fn as_sym(&self) -> &SymMatrix {
        &self.0
    }

    pub fn into_sym(self) -> SymMatrix {
        self.0
    }

    /// Upper-triangular `R` with `RᵀR = Q`; its columns form a basis with
    /// Gram matrix `Q`.
    pub fn cholesky_basis(&self) -> BasisMatrix {
        let n = self.dim();
        let mut r = vec![vec![0.0; n]; n];
        for j in 0..n {
            for i in 0..=j {
                let mut s = self.get(i, j);
                for k in 0..i {
                    s -= r[k][i] * r[k][j];
                }
                r[i][j] = if i == j { s.max(0.0).sqrt() } else { s / r[i][i] };
            }
        }
        let cols = (0..n).map(|j| (0..n).map(|i| r[i][j]).collect()).collect();
        BasisMatrix { n, cols }
    }

    /// `λ_max / λ_min`.
    pub fn condition_number(&self) -> f64 {
        let ev = self.eigenvalues();
        ev[ev.len() - 1] / ev[0]
    }
}

fn leading_minor(m: &SymMatrix, k: usize) -> f64 {
    let rows = m.to_dense();
    let sub: Vec<Vec<f64>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
    lu_determinant(sub)
}

impl std::ops::Deref for GramMatrix {
    type Target = SymMatrix;
    fn deref(&self) -> &SymMatrix {
        &self.0
    }
}

/// `λ Q1 + (1 − λ) Q2`. Exact entries survive when `λ` is exactly
/// representable (always, for a finite `f64`) and both inputs are exact.
pub fn convex_combination(q1: &GramMatrix, q2: &GramMatrix, lambda: f64) -> Result<GramMatrix> {
    if q1.dim() != q2.dim() {
        return Err(Error::DimensionMismatch { expected: q1.dim(), found: q2.dim() });
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::Domain(format!("λ = {lambda} outside [0, 1]")));
    }
    let n = q1.dim();
    let m = match (q1.exact_upper(), q2.exact_upper(), rational_from_f64(lambda)) {
        (Some(e1), Some(e2), Some(l)) => {
            let one = Rational::from_integer(1.into());
            let upper = e1.iter().zip(e2).map(|(a, b)| &l * a + (&one - &l) * b).collect();
            SymMatrix::from_upper_exact(n, upper)?
        }
        _ => {
            let upper =
                q1.upper().iter().zip(q2.upper()).map(|(a, b)| lambda * a + (1.0 - lambda) * b).collect();
            SymMatrix::from_upper(n, upper)?
        }
    };
    GramMatrix::new(m)
}

/// Square matrix whose columns are the basis vectors `v_1 .. v_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisMatrix {
    n: usize,
    cols: Vec<Vec<f64>>,
}

impl BasisMatrix {
    pub fn from_columns(cols: Vec<Vec<f64>>) -> Result<Self> {
        let n = cols.len();
        if !(2..=MAX_DIM).contains(&n) {
            return Err(Error::UnsupportedDimension { n, context: "basis" });
        }
        for c in &cols {
            if c.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.len() });
            }
            if c.iter().any(|x| !x.is_finite()) {
                return Err(Error::Domain("non-finite basis entry".into()));
            }
        }
        Ok(Self { n, cols })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_columns((0..n).map(|j| (0..n).map(|i| f64::from(u8::from(i == j))).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn column(&self, j: usize) -> &[f64] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<f64>] {
        &self.cols
    }

    /// Row-major dense copy, `a[i][j]` = i-th coordinate of `v_j`.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.cols[j][i]).collect()).collect()
    }

    pub fn determinant(&self) -> f64 {
        lu_determinant(self.to_dense())
    }

    /// Multiply column `j` by `signs[j]`.
    pub fn with_signs(&self, signs: &[i8]) -> Result<Self> {
        if signs.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: signs.len() });
        }
        let cols = self
            .cols
            .iter()
            .zip(signs)
            .map(|(c, &s)| c.iter().map(|x| x * f64::from(s)).collect())
            .collect();
        Ok(Self { n: self.n, cols })
    }

    /// Row-major inverse by Gauss–Jordan with partial pivoting.
    pub fn inverse(&self) -> Result<Vec<Vec<f64>>> {
        let n = self.n;
        let mut a = self.to_dense();
        let mut inv: Vec<Vec<f64>> =
            (0..n).map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect()).collect();
        for k in 0..n {
            let p = (k..n).max_by(|&x, &y| a[x][k].abs().total_cmp(&a[y][k].abs())).unwrap();
            if a[p][k] == 0.0 {
                return Err(Error::SingularBasis);
            }
            a.swap(p, k);
            inv.swap(p, k);
            let piv = a[k][k];
            for j in 0..n {
                a[k][j] /= piv;
                inv[k][j] /= piv;
            }
            for i in 0..n {
                if i != k {
                    let f = a[i][k];
                    if f != 0.0 {
                        for j in 0..n {
                            a[i][j] -= f * a[k][j];
                            inv[i][j] -= f * inv[k][j];
                        }
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Spectral condition number of the basis matrix, `sqrt(cond(AᵀA))`.
    pub fn condition_number(&self) -> f64 {
        let q = SymMatrix::from_fn(self.n, |i, j| dot(&self.cols[i], &self.cols[j])).expect("valid dim");
        let ev = q.eigenvalues();
        (ev[ev.len() - 1] / ev[0]).sqrt()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Q = AᵀA`, `q_ij = ⟨v_i, v_j⟩`.
pub fn gram_from_basis(basis: &BasisMatrix) -> Result<GramMatrix> {
    let norms: f64 = basis.cols.iter().map(|c| dot(c, c).sqrt()).product();
    if norms == 0.0 || basis.determinant().abs() <= 1e-12 * norms {
        return Err(Error::SingularBasis);
    }
    let q = SymMatrix::from_fn(basis.n, |i, j| dot(&basis.cols[i], &basis.cols[j]))?;
    GramMatrix::new(q).map_err(|_| Error::SingularBasis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn half_rows(n: usize) -> Vec<Vec<Rational>> {
        (0..n)
            .map(|i| (i..n).map(|j| if i == j { rational(1, 1) } else { rational(1, 2) }).collect())
            .collect()
    }

    #[test]
    fn packed_indexing_is_symmetric() {
        let m = SymMatrix::from_upper_rows(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0], vec![6.0]]).unwrap();
        assert_eq!(m.get(0, 2), 3.0);
        assert_eq!(m.get(2, 0), 3.0);
        assert_eq!(m.get(1, 2), 5.0);
        assert_eq!(m.get(2, 1), 5.0);
        assert_eq!(m.get(2, 2), 6.0);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), m.get(j, i));
            }
        }
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(SymMatrix::from_upper_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).is_err());
        assert!(SymMatrix::from_upper(9, vec![0.0; 45]).is_err());
    }

    #[test]
    fn fcc_gram_and_determinants() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let b = BasisMatrix::from_columns(vec![vec![s, s, 0.0], vec![s, 0.0, s], vec![0.0, s, s]]).unwrap();
        let q = gram_from_basis(&b).unwrap();
        let expect = [[1.0, 0.5, 0.5], [0.5, 1.0, 0.5], [0.5, 0.5, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((q.get(i, j) - expect[i][j]).abs() < 1e-15);
            }
        }
        assert!((q.determinant() - 0.5).abs() < 1e-14);
        let exact = GramMatrix::from_upper_rows_exact(&half_rows(3)).unwrap();
        assert_eq!(exact.exact_determinant().unwrap(), rational(1, 2));
    }

    #[test]
    fn identity_gram() {
        let q = gram_from_basis(&BasisMatrix::identity(3).unwrap()).unwrap();
        assert_eq!(q.to_dense(), vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]);
        for n in 2..=8 {
            assert_eq!(GramMatrix::identity(n).unwrap().determinant(), 1.0);
        }
    }

    #[test]
    fn singular_basis_rejected() {
        let b = BasisMatrix::from_columns(vec![vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(gram_from_basis(&b), Err(Error::SingularBasis));
    }

    #[test]
    fn q0_q1_determinants_exact() {
        let q0 = GramMatrix::from_upper_rows_exact(&half_rows(4)).unwrap();
        assert_eq!(q0.exact_determinant().unwrap(), rational(5, 16));
        let mut rows = half_rows(4);
        rows[0][1] = rational(0, 1);
        let q1 = GramMatrix::from_upper_rows_exact(&rows).unwrap();
        assert_eq!(q1.exact_determinant().unwrap(), rational(1, 4));
        assert!((q0.float_determinant() - 5.0 / 16.0).abs() < 1e-15);
    }

    #[test]
    fn quadratic_form_examples() {
        let q0 = GramMatrix::from_upper_rows_exact(&half_rows(4)).unwrap();
        assert_eq!(q0.quadratic_form(&[1.0, 0.0, 0.0, 0.0]).unwrap(), 1.0);
        assert!((q0.quadratic_form(&[0.5; 4]).unwrap() - 2.5).abs() < 1e-15);
        assert!(q0.quadratic_form(&[1.0; 3]).is_err());
        let id = GramMatrix::identity(3).unwrap();
        let x = [0.6, 0.0, 0.8];
        assert!((id.quadratic_form(&x).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn definiteness_cases() {
        assert!(SymMatrix::identity(4).unwrap().is_positive_definite());
        let rank1 = SymMatrix::from_upper_rows_exact(&[vec![rational(1, 1), rational(1, 1)], vec![rational(1, 1)]])
            .unwrap();
        assert_eq!(rank1.definiteness(), Definiteness::NotPositiveDefinite { minor: 2 });
        let rank1f = rank1.clone().into_float();
        assert_eq!(rank1f.definiteness(), Definiteness::Indeterminate { minor: 2 });
        assert!(!rank1f.is_positive_definite());
        let q0 = SymMatrix::from_upper_rows_exact(&half_rows(4)).unwrap();
        assert!(q0.is_positive_definite());
        assert!(q0.clone().into_float().is_positive_definite());
        let neg = SymMatrix::from_upper_rows(&[vec![1.0, 2.0], vec![1.0]]).unwrap();
        assert_eq!(neg.definiteness(), Definiteness::NotPositiveDefinite { minor: 2 });
        assert!(matches!(GramMatrix::new(neg), Err(Error::NotPositiveDefinite { minor: 2, .. })));
    }

    #[test]
    fn definiteness_is_scale_invariant() {
        let m = SymMatrix::from_upper_rows(&[vec![1e-8, 0.5e-8], vec![1e-8]]).unwrap();
        assert!(m.is_positive_definite());
        let big = SymMatrix::from_upper_rows(&[vec![1e8, 0.5e8], vec![1e8]]).unwrap();
        assert!(big.is_positive_definite());
    }

    #[test]
    fn eigenvalues_of_fcc() {
        let q0 = SymMatrix::from_upper_rows_exact(&half_rows(4)).unwrap();
        let ev = q0.eigenvalues();
        for (got, want) in ev.iter().zip([0.5, 0.5, 0.5, 2.5]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn convex_combination_examples() {
        let id = GramMatrix::identity(2).unwrap();
        let d14 = GramMatrix::new(SymMatrix::diagonal(&[1.0, 4.0]).unwrap()).unwrap();
        let d41 = GramMatrix::new(SymMatrix::diagonal(&[4.0, 1.0]).unwrap()).unwrap();
        assert_eq!(convex_combination(&d14, &d41, 1.0).unwrap().upper(), d14.upper());
        assert_eq!(convex_combination(&id, &id, 0.5).unwrap().upper(), id.upper());
        let mid = convex_combination(&d14, &d41, 0.5).unwrap();
        assert_eq!(mid.upper(), &[2.5, 0.0, 2.5]);
        assert_eq!(mid.determinant(), 6.25);
        assert!(convex_combination(&d14, &d41, 1.5).is_err());
        assert!(convex_combination(&d14, &GramMatrix::identity(3).unwrap(), 0.5).is_err());
    }

    #[test]
    fn cholesky_basis_reproduces_gram() {
        let q0 = GramMatrix::from_upper_rows_exact(&half_rows(4)).unwrap();
        let b = q0.cholesky_basis();
        let g = gram_from_basis(&b).unwrap();
        for (x, y) in g.upper().iter().zip(q0.upper()) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn sign_congruence_flips_off_diagonal() {
        let q = SymMatrix::from_upper_rows_exact(&half_rows(3)).unwrap();
        let f = q.sign_congruence(&[1, -1, 1]).unwrap();
        assert_eq!(f.get(0, 1), -0.5);
        assert_eq!(f.get(1, 2), -0.5);
        assert_eq!(f.get(0, 2), 0.5);
        assert_eq!(f.exact_entry(0, 1).unwrap(), &rational(-1, 2));
    }

    #[test]
    fn basis_inverse() {
        let b = BasisMatrix::from_columns(vec![vec![2.0, 0.0], vec![1.0, 1.0]]).unwrap();
        let inv = b.inverse().unwrap();
        // A = [[2,1],[0,1]]
        assert_eq!(inv, vec![vec![0.5, -0.5], vec![0.0, 1.0]]);
    }

    #[test]
    fn labels() {
        let q = SymMatrix::from_upper_rows(&[vec![1.0, 2.0, 3.0, 4.0], vec![5.0, 6.0, 7.0], vec![8.0, 9.0], vec![10.0]])
            .unwrap();
        let l = q.labels4().unwrap();
        assert_eq!((l.a, l.a1, l.a2, l.a3, l.b, l.b1, l.b2, l.c, l.c1, l.d), (1., 2., 3., 4., 5., 6., 7., 8., 9., 10.));
        assert!(q.labels3().is_none());
    }
}
