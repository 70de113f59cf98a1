use num::Num;

use crate::error::{Error, Result};

/// Minimal determinant of a reduced form with sorted diagonal `diag`:
///
/// - `n = 2`: `ac − a²/4`
/// - `n = 3`: `abc/2 + ab(c−b)/4 + ac(b−a)/4`
/// - `n = 4`: `abcd/4 + acd(b−a)/4 + abd(c−b)/4 + abc(d−c)/4 + a²(b−c)²/16`
pub fn barnes_min_det<T>(diag: &[T]) -> Result<T>
where
    T: Num + Clone + PartialOrd,
{
    let zero = T::zero();
    if diag.is_empty() || diag[0] <= zero || diag.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::UnsortedDiagonal);
    }
    let two = T::one() + T::one();
    let four = two.clone() * two.clone();
    let sixteen = four.clone() * four.clone();
    let v = |i: usize| diag[i].clone();
    match diag.len() {
        2 => {
            let (a, c) = (v(0), v(1));
            Ok(a.clone() * c - a.clone() * a / four)
        }
        3 => {
            let (a, b, c) = (v(0), v(1), v(2));
            let abc = a.clone() * b.clone() * c.clone();
            Ok(abc / two
                + a.clone() * b.clone() * (c.clone() - b.clone()) / four.clone()
                + a.clone() * c * (b - a) / four)
        }
        4 => {
            let (a, b, c, d) = (v(0), v(1), v(2), v(3));
            let bc = b.clone() - c.clone();
            Ok(a.clone() * b.clone() * c.clone() * d.clone() / four.clone()
                + a.clone() * c.clone() * d.clone() * (b.clone() - a.clone()) / four.clone()
                + a.clone() * b.clone() * d.clone() * (c.clone() - b.clone()) / four.clone()
                + a.clone() * b * c.clone() * (d - c) / four
                + a.clone() * a * bc.clone() * bc / sixteen)
        }
        n => Err(Error::UnsupportedDimension { n, context: "minimal determinant formula (2 ≤ n ≤ 4)" }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rational, Rational};

    #[test]
    fn well_rounded_values() {
        let one = || rational(1, 1);
        assert_eq!(barnes_min_det(&[one(), one()]).unwrap(), rational(3, 4));
        assert_eq!(barnes_min_det(&[one(), one(), one()]).unwrap(), rational(1, 2));
        assert_eq!(barnes_min_det(&[one(), one(), one(), one()]).unwrap(), rational(1, 4));
        assert!((barnes_min_det(&[1.0_f64, 1.0, 1.0]).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_unsorted_or_nonpositive() {
        assert_eq!(barnes_min_det(&[2.0, 1.0]), Err(Error::UnsortedDiagonal));
        assert_eq!(barnes_min_det(&[0.0, 1.0]), Err(Error::UnsortedDiagonal));
        let d: Vec<Rational> = (1..=5).map(|k| rational(k, 1)).collect();
        assert!(barnes_min_det(&d).is_err());
    }
}
