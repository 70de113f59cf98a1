use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use super::quadrature::MC_CHUNK;
use super::ILL_CONDITIONED;
use crate::error::{Error, Result};
use crate::linalg::BasisMatrix;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    /// `√(p(1−p)/samples)`.
    pub stderr: f64,
    pub samples: u64,
    pub hits: u64,
    pub ill_conditioned: bool,
}

/// Fraction of uniform directions `u` with `B⁻¹u ≥ 0` componentwise.
///
/// Chunk `c` of `2^16` samples draws from stream `c` of the seeded generator,
/// so the estimate does not depend on the thread count.
pub fn mc_solid_angle(basis: &BasisMatrix, samples: u64, seed: u64) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::InvalidSpec("monte carlo needs at least one sample".into()));
    }
    let inv = basis.inverse()?;
    let n = basis.dim();
    let chunks = samples.div_ceil(MC_CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let count = MC_CHUNK.min(samples - c * MC_CHUNK);
            let mut u = vec![0.0; n];
            let mut hits = 0u64;
            for _ in 0..count {
                u.iter_mut().for_each(|v| *v = rng.sample(StandardNormal));
                // the sign test is invariant under normalizing u
                let inside = inv.iter().all(|row| row.iter().zip(&u).map(|(a, b)| a * b).sum::<f64>() >= 0.0);
                hits += u64::from(inside);
            }
            hits
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum();
    let p = hits as f64 / samples as f64;
    Ok(McEstimate {
        estimate: p,
        stderr: (p * (1.0 - p) / samples as f64).sqrt(),
        samples,
        hits,
        ill_conditioned: basis.condition_number() > ILL_CONDITIONED,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_basis_hits_an_eighth() {
        let r = mc_solid_angle(&BasisMatrix::identity(3).unwrap(), 1_000_000, 11).unwrap();
        assert!((r.estimate - 0.125).abs() < 3.0 * r.stderr);
        assert!(!r.ill_conditioned);
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let b = BasisMatrix::from_columns(vec![vec![1.0, 0.2, 0.0], vec![0.3, 1.0, 0.1], vec![0.0, 0.4, 1.0]]).unwrap();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let many = rayon::ThreadPoolBuilder::new().num_threads(5).build().unwrap();
        let a = one.install(|| mc_solid_angle(&b, 300_001, 9).unwrap());
        let c = many.install(|| mc_solid_angle(&b, 300_001, 9).unwrap());
        assert_eq!(a, c);
    }

    #[test]
    fn flags_ill_conditioned_basis() {
        let b = BasisMatrix::from_columns(vec![vec![1.0, 0.0], vec![1.0, 1e-9]]).unwrap();
        assert!(mc_solid_angle(&b, 10, 0).unwrap().ill_conditioned);
    }
}
