//! Named forms used throughout the crate and its tests.

use crate::linalg::{rational, BasisMatrix, GramMatrix, Rational, SymMatrix};

fn half() -> Rational {
    rational(1, 2)
}

/// Unit diagonal, every off-diagonal entry `1/2`; the face-centered cubic
/// form in rank `n` (`fcc(3)`, `fcc(4)`, `fcc(5)` are the rank-3, rank-4 and
/// rank-5 analogues).
pub fn fcc(n: usize) -> GramMatrix {
    let rows: Vec<Vec<Rational>> =
        (0..n).map(|i| (i..n).map(|j| if i == j { rational(1, 1) } else { half() }).collect()).collect();
    GramMatrix::from_upper_rows_exact(&rows).expect("fcc form is positive definite")
}

/// [`fcc`] with `q12 = 0`: the minimal-determinant well-rounded form
/// `[1,0,½,½; 1,½,½; 1,½; 1]` for `n = 4` and its rank-5 analogue.
pub fn fcc_with_zero(n: usize) -> GramMatrix {
    let mut rows: Vec<Vec<Rational>> =
        (0..n).map(|i| (i..n).map(|j| if i == j { rational(1, 1) } else { half() }).collect()).collect();
    rows[0][1] = rational(0, 1);
    GramMatrix::from_upper_rows_exact(&rows).expect("form is positive definite")
}

/// Unit-diagonal rank-4 form `[1,a1,a2,a3; 1,b1,b2; 1,c1; 1]`.
pub fn unit_rank4(a1: Rational, a2: Rational, a3: Rational, b1: Rational, b2: Rational, c1: Rational) -> SymMatrix {
    let one = rational(1, 1);
    SymMatrix::from_upper_rows_exact(&[
        vec![one.clone(), a1, a2, a3],
        vec![one.clone(), b1, b2],
        vec![one.clone(), c1],
        vec![one],
    ])
    .expect("4x4 shape")
}

/// Float version of [`unit_rank4`].
pub fn unit_rank4_f64(a1: f64, a2: f64, a3: f64, b1: f64, b2: f64, c1: f64) -> SymMatrix {
    SymMatrix::from_upper_rows(&[vec![1.0, a1, a2, a3], vec![1.0, b1, b2], vec![1.0, c1], vec![1.0]]).expect("4x4 shape")
}

/// The reduced-triangle form with `a1 = c1 = a3 = b1 = ½` and free `a2, b2`.
pub fn triangle_form(a2: f64, b2: f64) -> SymMatrix {
    unit_rank4_f64(0.5, a2, 0.5, 0.5, b2, 0.5)
}

/// [`triangle_form`] at `a2 = b2 = 0`, the comparison form bounding the
/// second-derivative integrals from above. Singular, with kernel
/// `(1, −1, 1, −1)`, but positive on the nonnegative orthant.
pub fn triangle_origin_form() -> SymMatrix {
    let z = rational(0, 1);
    unit_rank4(half(), z.clone(), half(), half(), z, half())
}

/// Direction `D` with `xᵀDx = 2 x1 x3` (unit step in `a2`).
pub fn direction_a2() -> SymMatrix {
    SymMatrix::from_upper_rows(&[vec![0.0, 0.0, 1.0, 0.0], vec![0.0, 0.0, 0.0], vec![0.0, 0.0], vec![0.0]])
        .expect("4x4 shape")
}

/// Direction `D` with `xᵀDx = 2 x1 x3 − 2 x2 x4` (slide along `a2 + b2 = const`).
pub fn direction_slide() -> SymMatrix {
    SymMatrix::from_upper_rows(&[vec![0.0, 0.0, 1.0, 0.0], vec![0.0, 0.0, -1.0], vec![0.0, 0.0], vec![0.0]])
        .expect("4x4 shape")
}

/// Columns `(1,1,0)/√2, (1,0,1)/√2, (0,1,1)/√2`.
pub fn fcc_basis() -> BasisMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    BasisMatrix::from_columns(vec![vec![s, s, 0.0], vec![s, 0.0, s], vec![0.0, s, s]]).expect("3x3 basis")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(fcc(3).exact_determinant().unwrap(), rational(1, 2));
        assert_eq!(fcc(4).exact_determinant().unwrap(), rational(5, 16));
        assert_eq!(fcc_with_zero(4).exact_determinant().unwrap(), rational(1, 4));
        // eigenvalues 3 and (1/2) x4
        assert_eq!(fcc(5).exact_determinant().unwrap(), rational(3, 16));
        assert_eq!(fcc_with_zero(5).exact_determinant().unwrap(), rational(1, 8));
        let o = triangle_origin_form();
        assert_eq!(o.exact_determinant().unwrap(), rational(0, 1));
        assert_eq!(o.quadratic_form(&[1.0, -1.0, 1.0, -1.0]).unwrap(), 0.0);
    }
}
