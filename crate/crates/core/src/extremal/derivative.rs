use num::Num;

use crate::error::{Error, Result};

/// `∂det/∂a3 + ∂det/∂b1` of `[1,1/2,a2,a3; 1,b1,b2; 1,1/2; 1]`:
///
/// `2(a2+b2) − (5/2)(a3+b1) + 2(a3 b1² + b1 a3²) − 2(a2 a3 b2 + a2 b1 b2)`.
///
/// Defined on `[0, 1/2]⁴` intersected with `a3 + b1 ≥ a2 + b2 ≥ 1/2`.
pub fn partial_det_direction_check<T>(a2: T, a3: T, b1: T, b2: T) -> Result<T>
where
    T: Num + Clone + PartialOrd + std::fmt::Debug,
{
    let two = T::one() + T::one();
    let half = T::one() / two.clone();
    let vars = [&a2, &a3, &b1, &b2];
    if vars.iter().any(|v| **v < T::zero() || **v > half) {
        return Err(Error::Domain(format!("entries {vars:?} must lie in [0, 1/2]")));
    }
    let s = a2.clone() + b2.clone();
    let t = a3.clone() + b1.clone();
    if t < s || s < half {
        return Err(Error::Domain(format!("need a3 + b1 ≥ a2 + b2 ≥ 1/2, got {vars:?}")));
    }
    let five_halves = (two.clone() + two.clone() + T::one()) / two.clone();
    Ok(two.clone() * s - five_halves * t
        + two.clone() * (a3.clone() * b1.clone() * b1.clone() + b1.clone() * a3.clone() * a3.clone())
        - two * (a2.clone() * a3 * b2.clone() + a2 * b1 * b2))
}
