//! Reproducible random instance generation for property-test corpora.

use cfp_core::Instance;

use crate::brute::OracleError;

/// SplitMix64: a fixed 64-bit mixing generator, chosen so corpora are
/// identical across runs, platforms, and implementations.
///
/// State update: `s += 0x9E3779B97F4A7C15`; output mixes the new state with
/// `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9`,
/// `z = (z ^ (z >> 27)) * 0x94D049BB133111EB`, `z ^ (z >> 31)`.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Generates a reproducible random 0/1 matrix with at least one 1.
///
/// Each entry is 1 when the generator's top 53 bits fall below
/// `density * 2^53`; an all-zero draw is rejected and redrawn from the
/// continuing stream. Identical `(m, p, density, seed)` always produce the
/// identical matrix.
pub fn random_instance(
    m: usize,
    p: usize,
    density: f64,
    seed: u64,
) -> Result<Instance, OracleError> {
    if m < 1 || p < m {
        return Err(OracleError::InvalidParams(format!(
            "dimensions must satisfy 1 <= m <= p, got {m}x{p}"
        )));
    }
    if !(density > 0.0 && density < 1.0) {
        return Err(OracleError::InvalidParams(format!(
            "density must be strictly between 0 and 1, got {density}"
        )));
    }
    let threshold = (density * (1u64 << 53) as f64) as u64;
    let mut rng = SplitMix64::new(seed);
    loop {
        let mut rows = vec![vec![0u8; p]; m];
        let mut any = false;
        for row in &mut rows {
            for slot in row.iter_mut() {
                let bit = (rng.next() >> 11) < threshold;
                *slot = bit as u8;
                any |= bit;
            }
        }
        if any {
            return Ok(Instance::from_rows(rows).expect("generated matrix is valid"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_seeds_give_identical_matrices() {
        let a = random_instance(3, 4, 0.5, 42).unwrap();
        let b = random_instance(3, 4, 0.5, 42).unwrap();
        for i in 0..3 {
            for j in 0..4 {
                assert_eq!(a.one(i, j), b.one(i, j));
            }
        }
        let c = random_instance(3, 4, 0.5, 43).unwrap();
        let differs = (0..3).any(|i| (0..4).any(|j| a.one(i, j) != c.one(i, j)));
        assert!(differs);
    }

    #[test]
    fn always_at_least_one_one() {
        for seed in 0..50 {
            let inst = random_instance(2, 2, 0.05, seed).unwrap();
            assert!(inst.n1() >= 1);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(random_instance(0, 3, 0.5, 1).is_err());
        assert!(random_instance(4, 3, 0.5, 1).is_err());
        assert!(random_instance(2, 3, 0.0, 1).is_err());
        assert!(random_instance(2, 3, 1.0, 1).is_err());
    }

    #[test]
    fn pinned_stream_head() {
        // Freeze the generator definition: first outputs for seed 1.
        let mut rng = SplitMix64::new(1);
        assert_eq!(rng.next(), 0x910A_2DEC_8902_5CC1);
        assert_eq!(rng.next(), 0xBEEB_8DA1_658E_EC67);
    }
}
