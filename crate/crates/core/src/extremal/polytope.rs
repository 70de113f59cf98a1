//! Vertices of the fixed-diagonal reduced domain.
//!
//! A [`FacetSystem`] is a list of inequalities `coeffs · x ≤ bound(c1)` in a
//! few free off-diagonal entries, with optional dependence on one parameter
//! `c1`. Each nonsingular `k`-subset of facets gives a point affine in `c1`;
//! the feasible ones are the vertices. Everything after a float prefilter is
//! exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, rational, to_f64, Rational, SymMatrix};
use crate::reduction::{reduction_conditions, ConditionKind, Inequality};

/// `constant + slope · c1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Affine {
    pub constant: Rational,
    pub slope: Rational,
}

impl Affine {
    pub fn constant(c: Rational) -> Self {
        Self { constant: c, slope: Rational::zero() }
    }

    pub fn new(constant: Rational, slope: Rational) -> Self {
        Self { constant, slope }
    }

    pub fn c1() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn at(&self, c1: &Rational) -> Rational {
        &self.constant + &self.slope * c1
    }

    fn at_f64(&self, c1: f64) -> f64 {
        to_f64(&self.constant) + to_f64(&self.slope) * c1
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slope = |s: &Rational| {
            if s.is_one() {
                "c1".to_string()
            } else {
                format!("{}*c1", format_rational(s))
            }
        };
        match (self.constant.is_zero(), self.slope.is_zero()) {
            (_, true) => f.write_str(&format_rational(&self.constant)),
            (true, false) if self.slope.is_negative() => write!(f, "-{}", slope(&-&self.slope)),
            (true, false) => f.write_str(&slope(&self.slope)),
            (false, false) if self.slope.is_negative() => {
                write!(f, "{}-{}", format_rational(&self.constant), slope(&-&self.slope))
            }
            (false, false) => write!(f, "{}+{}", format_rational(&self.constant), slope(&self.slope)),
        }
    }
}

impl Serialize for Affine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Polynomial in `c1` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Self::new(coeffs.iter().map(|&(p, q)| rational(p, q)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut out = vec![Rational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis polynomial Π_{j≠i} (x − x_j) / (x_i − x_j)
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (k, b) in basis.iter().enumerate() {
                out[k] += b * &scale;
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => f.write_str(&format_rational(&mag))?,
                (1, true) => f.write_str("c1")?,
                (1, false) => write!(f, "{}*c1", format_rational(&mag))?,
                (_, true) => write!(f, "c1^{k}")?,
                (_, false) => write!(f, "{}*c1^{k}", format_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `coeffs · x ≤ bound`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Facet {
    pub label: String,
    pub coeffs: Vec<i64>,
    pub bound: Affine,
}

/// Entry of the assembled matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Entry {
    Fixed(Affine),
    Var(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FacetSystem {
    pub name: String,
    pub vars: Vec<String>,
    pub facets: Vec<Facet>,
    /// Dimension and packed upper triangle of the form in terms of the free
    /// variables and `c1`.
    pub dim: usize,
    pub template: Vec<Entry>,
    /// Variable permutations mapping vertices to vertices of equal determinant.
    pub generators: Vec<Vec<usize>>,
    /// `c1` range on which [`enumerate_vertex_classes`] certifies vertices.
    pub range: (Rational, Rational),
}

fn half() -> Rational {
    rational(1, 2)
}

fn box_facets(vars: &[&str]) -> Vec<Facet> {
    let k = vars.len();
    let mut out = Vec::new();
    for (i, v) in vars.iter().enumerate() {
        let mut lo = vec![0; k];
        lo[i] = -1;
        out.push(Facet { label: format!("{v} >= 0"), coeffs: lo, bound: Affine::constant(Rational::zero()) });
        let mut hi = vec![0; k];
        hi[i] = 1;
        out.push(Facet { label: format!("{v} <= 1/2"), coeffs: hi, bound: Affine::constant(half()) });
    }
    out
}

fn unit_diag() -> Entry {
    Entry::Fixed(Affine::constant(Rational::one()))
}

impl FacetSystem {
    /// Unit-diagonal rank-4 forms `[1,a1,a2,a3; 1,b1,b2; 1,c1; 1]` with
    /// `0 ≤ · ≤ 1/2` and the three pair-grouped inequalities; variables
    /// `(a1, a2, a3, b1, b2)`.
    ///
    /// Symmetries: swapping `v3, v4` (`a2 ↔ a3`, `b1 ↔ b2`) and swapping
    /// `v1, v2` (`a2 ↔ b1`, `a3 ↔ b2`); both fix `a1` and `c1`.
    pub fn unit_rank4() -> Self {
        let vars = ["a1", "a2", "a3", "b1", "b2"];
        let mut facets = box_facets(&vars);
        let c = |k: i64, s: i64| Affine::new(rational(k, 2), rational(s, 1));
        facets.push(Facet { label: "3+2(a1+c1)-2(a2+b2+a3+b1) >= 0".into(), coeffs: vec![-2, 2, 2, 2, 2], bound: c(6, 2) });
        facets.push(Facet { label: "3+2(a2+b2)-2(a1+c1+a3+b1) >= 0".into(), coeffs: vec![2, -2, 2, 2, -2], bound: c(6, -2) });
        facets.push(Facet { label: "3+2(a3+b1)-2(a1+c1+a2+b2) >= 0".into(), coeffs: vec![2, 2, -2, -2, 2], bound: c(6, -2) });
        let v = Entry::Var;
        Self {
            name: "unit-rank4".into(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            facets,
            dim: 4,
            template: vec![
                unit_diag(), v(0), v(1), v(2),
                unit_diag(), v(3), v(4),
                unit_diag(), Entry::Fixed(Affine::c1()),
                unit_diag(),
            ],
            generators: vec![vec![0, 2, 1, 4, 3], vec![0, 3, 4, 1, 2]],
            range: (Rational::zero(), half()),
        }
    }

    /// [`FacetSystem::unit_rank4`] with `a1 = 1/2`; variables
    /// `(a2, a3, b1, b2)`. The first pair inequality then always holds.
    pub fn unit_rank4_a1_half() -> Self {
        let vars = ["a2", "a3", "b1", "b2"];
        let mut facets = box_facets(&vars);
        let b = Affine::new(Rational::one(), rational(-1, 1));
        facets.push(Facet { label: "1-c1+(a3+b1)-(a2+b2) >= 0".into(), coeffs: vec![1, -1, -1, 1], bound: b.clone() });
        facets.push(Facet { label: "1-c1+(a2+b2)-(a3+b1) >= 0".into(), coeffs: vec![-1, 1, 1, -1], bound: b });
        let v = Entry::Var;
        Self {
            name: "unit-rank4-a1-half".into(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            facets,
            dim: 4,
            template: vec![
                unit_diag(), Entry::Fixed(Affine::constant(half())), v(0), v(1),
                unit_diag(), v(2), v(3),
                unit_diag(), Entry::Fixed(Affine::c1()),
                unit_diag(),
            ],
            generators: vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]],
            range: (Rational::zero(), half()),
        }
    }

    /// Reduced forms with the given sorted positive diagonal; variables are
    /// the off-diagonal entries `q12, q13, .., q(n-1)n` and the facets are
    /// the second-type reduction conditions.
    pub fn fixed_diagonal(diag: &[Rational]) -> Result<Self> {
        let n = diag.len();
        if !(2..=4).contains(&n) {
            return Err(Error::UnsupportedDimension { n, context: "fixed-diagonal system (2 ≤ n ≤ 4)" });
        }
        if !diag[0].is_positive() || diag.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnsortedDiagonal);
        }
        let mut var_of = BTreeMap::new();
        let mut vars = Vec::new();
        let mut template = Vec::new();
        for i in 0..n {
            for j in i..n {
                if i == j {
                    template.push(Entry::Fixed(Affine::constant(diag[i].clone())));
                } else {
                    var_of.insert((i, j), vars.len());
                    template.push(Entry::Var(vars.len()));
                    vars.push(format!("q{}{}", i + 1, j + 1));
                }
            }
        }
        let mut facets = Vec::new();
        for c in reduction_conditions(n)? {
            if c.kind != ConditionKind::SecondType {
                continue;
            }
            debug_assert!(matches!(c.inequality, Inequality::Vector { .. }));
            // slack = Σ diag terms + Σ off terms ≥ 0  ⇔  −off · x ≤ diag part
            let mut coeffs = vec![0i64; vars.len()];
            let mut bound = Rational::zero();
            for t in c.terms() {
                if t.i == t.j {
                    bound += Rational::from_integer(t.coeff.into()) * &diag[t.i];
                } else {
                    coeffs[var_of[&(t.i, t.j)]] = -t.coeff;
                }
            }
            facets.push(Facet { label: c.label.clone(), coeffs, bound: Affine::constant(bound) });
        }
        Ok(Self {
            name: format!("fixed-diagonal-{n}"),
            vars,
            facets,
            dim: n,
            template,
            generators: Vec::new(),
            range: (Rational::zero(), Rational::zero()),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// The form at free-variable values `x` and parameter `c1`.
    pub fn assemble(&self, x: &[Rational], c1: &Rational) -> SymMatrix {
        let upper = self
            .template
            .iter()
            .map(|e| match e {
                Entry::Fixed(a) => a.at(c1),
                Entry::Var(k) => x[*k].clone(),
            })
            .collect();
        SymMatrix::from_upper_exact(self.dim, upper).expect("template has packed length")
    }

    fn feasible_at(&self, x: &[Affine], c1: &Rational) -> bool {
        let point: Vec<Rational> = x.iter().map(|a| a.at(c1)).collect();
        self.facets.iter().all(|f| {
            let lhs: Rational = f.coeffs.iter().zip(&point).map(|(&c, v)| Rational::from_integer(c.into()) * v).sum();
            lhs <= f.bound.at(c1)
        })
    }

    fn feasible_at_f64(&self, x: &[(f64, f64)], c1: f64) -> bool {
        self.facets.iter().all(|f| {
            let lhs: f64 = f.coeffs.iter().zip(x).map(|(&c, v)| c as f64 * (v.0 + v.1 * c1)).sum();
            lhs <= f.bound.at_f64(c1) + 1e-9
        })
    }

    /// Orbit of `x` under the generated permutation group, including `x`.
    pub fn orbit(&self, x: &[Affine]) -> BTreeSet<Vec<Affine>> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![x.to_vec()];
        while let Some(p) = stack.pop() {
            if seen.insert(p.clone()) {
                for g in &self.generators {
                    stack.push(g.iter().map(|&k| p[k].clone()).collect());
                }
            }
        }
        seen
    }

    /// Intersection points, affine in `c1`, of nonsingular facet subsets
    /// whose float solution is feasible at one of `probes`.
    fn candidate_points(&self, probes: &[f64]) -> Vec<Vec<Affine>> {
        let k = self.num_vars();
        let m = self.facets.len();
        let mut out = BTreeSet::new();
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            if let Some(x) = self.solve_subset(&subset, probes) {
                out.insert(x);
            }
            // next k-combination of 0..m in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    return out.into_iter().collect();
                }
                i -= 1;
                if subset[i] < m - k + i {
                    break;
                }
            }
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }

    /// Exact solution of the facet equalities in `subset`, if the system is
    /// nonsingular and the float solution passes the probe filter.
    fn solve_subset(&self, subset: &[usize], probes: &[f64]) -> Option<Vec<Affine>> {
        let k = subset.len();
        let float = solve_f64(
            subset.iter().map(|&r| self.facets[r].coeffs.iter().map(|&c| c as f64).collect()).collect(),
            subset.iter().map(|&r| (to_f64(&self.facets[r].bound.constant), to_f64(&self.facets[r].bound.slope))).collect(),
        )?;
        if !probes.iter().any(|&c| self.feasible_at_f64(&float, c)) {
            return None;
        }
        let mut a: Vec<Vec<Rational>> = subset
            .iter()
            .map(|&r| {
                let f = &self.facets[r];
                let mut row: Vec<Rational> = f.coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect();
                row.push(f.bound.constant.clone());
                row.push(f.bound.slope.clone());
                row
            })
            .collect();
        for col in 0..k {
            let p = (col..k).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            let piv = a[col][col].clone();
            for v in a[col].iter_mut() {
                *v /= &piv;
            }
            for r in 0..k {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..k + 2 {
                        let d = &f * &a[col][c];
                        a[r][c] -= d;
                    }
                }
            }
        }
        Some(a.into_iter().map(|row| Affine::new(row[k].clone(), row[k + 1].clone())).collect())
    }
}

/// Solve `A x = b0 + b1 c1` in floats; `None` when numerically singular.
fn solve_f64(mut a: Vec<Vec<f64>>, mut b: Vec<(f64, f64)>) -> Option<Vec<(f64, f64)>> {
    let k = a.len();
    for col in 0..k {
        let p = (col..k).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))?;
        if a[p][col].abs() < 1e-9 {
            return None;
        }
        a.swap(col, p);
        b.swap(col, p);
        for r in col + 1..k {
            let f = a[r][col] / a[col][col];
            for c in col..k {
                a[r][c] -= f * a[col][c];
            }
            b[r].0 -= f * b[col].0;
            b[r].1 -= f * b[col].1;
        }
    }
    let mut x = vec![(0.0, 0.0); k];
    for r in (0..k).rev() {
        let (mut s0, mut s1) = b[r];
        for c in r + 1..k {
            s0 -= a[r][c] * x[c].0;
            s1 -= a[r][c] * x[c].1;
        }
        x[r] = (s0 / a[r][r], s1 / a[r][r]);
    }
    Some(x)
}

/// One orbit of vertices under the system's symmetries.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexClass {
    /// Lexicographically least orbit member, in the system's variable order.
    pub coords: Vec<Affine>,
    pub det_poly: Polynomial,
    pub multiplicity: usize,
}

impl VertexClass {
    pub fn coords_at(&self, c1: &Rational) -> Vec<Rational> {
        self.coords.iter().map(|a| a.at(c1)).collect()
    }

    pub fn coords_string(&self) -> String {
        format!("{{{}}}", self.coords.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Exact determinant polynomial of the form at affine coordinates `x`,
/// interpolated through `dim + 1` integer nodes.
pub fn det_polynomial(system: &FacetSystem, x: &[Affine]) -> Polynomial {
    let points: Vec<(Rational, Rational)> = (0..=system.dim as i64)
        .map(|t| {
            let c = rational(t, 1);
            let point: Vec<Rational> = x.iter().map(|a| a.at(&c)).collect();
            let det = system.assemble(&point, &c).exact_determinant().expect("exact template");
            (c, det)
        })
        .collect();
    Polynomial::interpolate(&points)
}

fn group_classes(system: &FacetSystem, points: Vec<Vec<Affine>>) -> Vec<VertexClass> {
    let mut classes: BTreeMap<Vec<Affine>, usize> = BTreeMap::new();
    for p in &points {
        let orbit = system.orbit(p);
        let rep = orbit.iter().next().expect("orbit contains the point").clone();
        classes.insert(rep, orbit.len());
    }
    classes
        .into_iter()
        .map(|(coords, multiplicity)| VertexClass { det_poly: det_polynomial(system, &coords), coords, multiplicity })
        .collect()
}

/// Vertex classes valid on the whole `c1` range of the system: feasible at
/// both endpoints, hence (all constraints being affine in `c1`) throughout.
pub fn enumerate_vertex_classes(system: &FacetSystem) -> Vec<VertexClass> {
    let (lo, hi) = system.range.clone();
    let points: Vec<Vec<Affine>> = system
        .candidate_points(&[to_f64(&lo)])
        .into_iter()
        .filter(|x| system.feasible_at(x, &lo) && system.feasible_at(x, &hi))
        .collect();
    group_classes(system, points)
}

/// Vertex classes at one parameter value. Candidates that coincide at `c1`
/// are merged, keeping the least affine representative.
pub fn enumerate_vertices(system: &FacetSystem, c1: &Rational) -> Vec<VertexClass> {
    let mut by_value: BTreeMap<Vec<Rational>, Vec<Affine>> = BTreeMap::new();
    for x in system.candidate_points(&[to_f64(c1)]) {
        if system.feasible_at(&x, c1) {
            let key: Vec<Rational> = x.iter().map(|a| a.at(c1)).collect();
            by_value.entry(key).or_insert(x);
        }
    }
    // orbits are computed on values so coinciding representatives group together
    let mut classes: BTreeMap<Vec<Rational>, (Vec<Affine>, usize)> = BTreeMap::new();
    for (value, affine) in &by_value {
        let orbit: BTreeSet<Vec<Rational>> = system
            .orbit(&value.iter().cloned().map(Affine::constant).collect::<Vec<_>>())
            .into_iter()
            .map(|v| v.into_iter().map(|a| a.constant).collect())
            .collect();
        let rep = orbit.iter().next().unwrap().clone();
        let entry = classes.entry(rep.clone()).or_insert_with(|| (by_value[&rep].clone(), orbit.len()));
        if &rep == value {
            entry.0 = affine.clone();
        }
    }
    classes
        .into_values()
        .map(|(coords, multiplicity)| VertexClass { det_poly: det_polynomial(system, &coords), coords, multiplicity })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinDet {
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
    /// Every class attaining the minimum.
    pub classes: Vec<VertexClass>,
}

pub(crate) fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// Smallest exact determinant over the vertices at `c1`, with all ties.
pub fn min_det_vertex(system: &FacetSystem, c1: &Rational) -> Option<MinDet> {
    let classes = enumerate_vertices(system, c1);
    let dets: Vec<Rational> = classes
        .iter()
        .map(|v| system.assemble(&v.coords_at(c1), c1).exact_determinant().expect("exact"))
        .collect();
    let value = dets.iter().min()?.clone();
    let classes = classes.into_iter().zip(&dets).filter(|(_, d)| **d == value).map(|(v, _)| v).collect();
    Some(MinDet { value, classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_display() {
        assert_eq!(Affine::constant(half()).to_string(), "1/2");
        assert_eq!(Affine::c1().to_string(), "c1");
        assert_eq!(Affine::new(half(), rational(-1, 1)).to_string(), "1/2-c1");
        assert_eq!(Affine::new(Rational::zero(), rational(-2, 1)).to_string(), "-2*c1");
    }

    #[test]
    fn polynomial_display_and_eval() {
        let p = Polynomial::from_ratios(&[(1, 4), (1, 2), (-3, 4)]);
        assert_eq!(p.to_string(), "1/4 + 1/2*c1 - 3/4*c1^2");
        assert_eq!(p.eval(&half()), rational(5, 16));
        assert_eq!(Polynomial::new(vec![Rational::zero()]).to_string(), "0");
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Polynomial::from_ratios(&[(5, 16), (3, 4), (-5, 4), (-1, 1), (1, 1)]);
        let pts: Vec<_> = (0..5).map(|t| (rational(t, 3), p.eval(&rational(t, 3)))).collect();
        assert_eq!(Polynomial::interpolate(&pts), p);
    }

    #[test]
    fn planar_segment_has_two_vertices() {
        let sys = FacetSystem::fixed_diagonal(&[rational(2, 1), rational(3, 1)]).unwrap();
        let v = enumerate_vertex_classes(&sys);
        let coords: Vec<String> = v.iter().map(|c| c.coords_string()).collect();
        assert_eq!(coords, vec!["{-1}", "{1}"]);
        let m = min_det_vertex(&sys, &Rational::zero()).unwrap();
        assert_eq!(m.value, rational(5, 1));
        assert_eq!(m.classes.len(), 2);
    }

    #[test]
    fn unsorted_diagonal_is_rejected() {
        assert_eq!(FacetSystem::fixed_diagonal(&[rational(2, 1), rational(1, 1)]), Err(Error::UnsortedDiagonal));
    }

    #[test]
    fn symmetry_orbits_tile_the_vertex_set() {
        for sys in [FacetSystem::unit_rank4(), FacetSystem::unit_rank4_a1_half()] {
            let total = sys
                .candidate_points(&[0.0])
                .into_iter()
                .filter(|x| sys.feasible_at(x, &sys.range.0) && sys.feasible_at(x, &sys.range.1))
                .count();
            let classes = enumerate_vertex_classes(&sys);
            assert_eq!(classes.iter().map(|c| c.multiplicity).sum::<usize>(), total);
        }
    }

    #[test]
    fn generators_preserve_the_facet_set() {
        for sys in [FacetSystem::unit_rank4(), FacetSystem::unit_rank4_a1_half()] {
            let key = |f: &Facet| (f.coeffs.clone(), f.bound.clone());
            let facets: BTreeSet<_> = sys.facets.iter().map(key).collect();
            for g in &sys.generators {
                for f in &sys.facets {
                    // (P x)_i = x_{g[i]}, so the coefficient of x_{g[i]} moves to slot i
                    let mut moved = vec![0; f.coeffs.len()];
                    for (i, &gi) in g.iter().enumerate() {
                        moved[i] = f.coeffs[gi];
                    }
                    assert!(facets.contains(&(moved, f.bound.clone())), "{} under {g:?}", f.label);
                }
            }
        }
    }
}
