#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solidcone::linalg::{gram_from_basis, rational, BasisMatrix, GramMatrix, Rational, SymMatrix};
use solidcone::reduction::check_reduced;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `I + spread · U(−1, 1)`, redrawn until reasonably conditioned.
pub fn random_basis(rng: &mut impl Rng, n: usize, spread: f64) -> BasisMatrix {
    loop {
        let cols: Vec<Vec<f64>> = (0..n)
            .map(|j| (0..n).map(|i| f64::from(i == j) + spread * rng.random_range(-1.0..1.0)).collect())
            .collect();
        let b = BasisMatrix::from_columns(cols).unwrap();
        if b.condition_number() < 30.0 {
            return b;
        }
    }
}

/// Basis with every coordinate positive, so every Gram entry is positive.
pub fn random_positive_basis(rng: &mut impl Rng, n: usize) -> BasisMatrix {
    loop {
        let cols: Vec<Vec<f64>> = (0..n)
            .map(|j| (0..n).map(|i| if i == j { 1.0 } else { rng.random_range(0.01..0.6) }).collect())
            .collect();
        let b = BasisMatrix::from_columns(cols).unwrap();
        if b.condition_number() < 30.0 {
            return b;
        }
    }
}

pub fn random_gram(rng: &mut impl Rng, n: usize) -> GramMatrix {
    gram_from_basis(&random_basis(rng, n, 0.6)).unwrap()
}

/// Sorted diagonal in `[1, 1 + spread]`, off-diagonals `q_ij ∈ ±[0, q_ii/2]`
/// (nonnegative when `nonneg`), kept when the full check accepts it.
pub fn random_reduced(rng: &mut impl Rng, n: usize, spread: f64, nonneg: bool) -> GramMatrix {
    loop {
        let mut d: Vec<f64> = (0..n).map(|_| 1.0 + spread * rng.random::<f64>()).collect();
        d.sort_by(f64::total_cmp);
        let lo = if nonneg { 0.0 } else { -0.5 };
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| (i..n).map(|j| if i == j { d[i] } else { d[i] * rng.random_range(lo..0.5) }).collect())
            .collect();
        let q = SymMatrix::from_upper_rows(&rows).unwrap();
        if check_reduced(&q, None).unwrap().is_reduced {
            if let Ok(g) = GramMatrix::new(q) {
                return g;
            }
        }
    }
}

/// Random rational `p/q` in `[lo, hi]` with denominator `den`.
pub fn random_rational(rng: &mut impl Rng, lo: i64, hi: i64, den: i64) -> Rational {
    rational(rng.random_range(lo * den..=hi * den), den)
}
