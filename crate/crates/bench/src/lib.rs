//! Fixtures shared by the benchmarks.

use ckspaces::{OmegaSignature, RankTwoBeltrami};

/// Anti-de Sitter signature `(1, -1, 1, ..., 1)` with `n` constants.
pub fn ads_signature(n: usize) -> OmegaSignature {
    let mut w = vec![1.0; n];
    if n > 1 {
        w[1] = -1.0;
    }
    OmegaSignature::new(w).expect("non-empty signature")
}

/// A fixed point of the rank-two Beltrami chart near the origin.
pub fn sample_rank_two_point(n: usize) -> RankTwoBeltrami {
    let eta = (1..n).map(|i| 0.05 * i as f64).collect();
    let xi = (1..n).map(|i| -0.03 * i as f64).collect();
    RankTwoBeltrami { eta, xi }
}
