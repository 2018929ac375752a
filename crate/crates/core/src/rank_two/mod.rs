//! The rank-two space `S^(2) = SO_{w1..wN}(N+1) / (SO_{w1}(2) x SO_{w3..wN}(N-1))`,
//! realised as the space of lines of `S^(1)` through Plücker coordinates.
//!
//! Rank-adapted constants: `k_(2) = w1`, `k_i = w_(i+1)` for `i = 1..N-1`,
//! so `k_ij = w_(i+1)(j+1)` and `k_0j = w_1(j+1)`. Translations are
//! `P_(1)i = Omega_1(i+1)` and `P_(2)i = Omega_0(i+1)`; rotations are
//! `J_(1)(2) = -Omega_01` and `J_ij = Omega_(i+1)(j+1)`.

mod bivector;
mod metric;
mod pluecker;

use std::fmt;

use crate::algebra::{GeneratorIndex, OmegaSignature};
use crate::error::{CkError, Result};

pub use bivector::{
    bivector_generator, bivector_matrix, bivector_one_param_subgroup, invariant_form_rank2,
};
pub use metric::{
    ambient_pullback_check_rank2, foliation_report_rank2, is_nondegenerate_rank2,
    metric_at_origin_rank2, rank2_metric, sectional_curvature_rank2_origin,
    subsidiary_metric_rank2,
};
pub use pluecker::{
    act_rank2, act_rank2_beltrami, eliminate_inessential, grassmann_invariant, pluecker_from_line, pluecker_origin,
    pluecker_residuals, rank2_beltrami, rank2_beltrami_to_pluecker, PlueckerPoint,
    RankTwoBeltrami, RankTwoEssentials,
};

/// Rank-adapted name of a generator of `so(N+1)` acting on `S^(2)`.
/// Indices `i, j` run over `1..=N-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankTwoGenerator {
    /// `J_(1)(2) = -Omega_01`.
    J12,
    /// `P_(1)i = Omega_1(i+1)`.
    P1(usize),
    /// `P_(2)i = Omega_0(i+1)`.
    P2(usize),
    /// `J_ij = Omega_(i+1)(j+1)`, `i < j`.
    J(usize, usize),
}

impl RankTwoGenerator {
    /// Sign and abstract generator with `self = sign * Omega_ab`.
    pub fn to_omega(self) -> (f64, GeneratorIndex) {
        match self {
            RankTwoGenerator::J12 => (-1.0, GeneratorIndex { a: 0, b: 1 }),
            RankTwoGenerator::P1(i) => (1.0, GeneratorIndex { a: 1, b: i + 1 }),
            RankTwoGenerator::P2(i) => (1.0, GeneratorIndex { a: 0, b: i + 1 }),
            RankTwoGenerator::J(i, j) => (1.0, GeneratorIndex { a: i + 1, b: j + 1 }),
        }
    }

    /// Inverse of [`RankTwoGenerator::to_omega`].
    pub fn from_omega(g: GeneratorIndex) -> (f64, RankTwoGenerator) {
        match (g.a, g.b) {
            (0, 1) => (-1.0, RankTwoGenerator::J12),
            (0, b) => (1.0, RankTwoGenerator::P2(b - 1)),
            (1, b) => (1.0, RankTwoGenerator::P1(b - 1)),
            (a, b) => (1.0, RankTwoGenerator::J(a - 1, b - 1)),
        }
    }

    pub fn validate(self, n: usize) -> Result<Self> {
        let ok = match self {
            RankTwoGenerator::J12 => n >= 1,
            RankTwoGenerator::P1(i) | RankTwoGenerator::P2(i) => i >= 1 && i < n,
            RankTwoGenerator::J(i, j) => i >= 1 && i < j && j < n,
        };
        if ok {
            Ok(self)
        } else {
            Err(CkError::InvalidSelector(format!("{self} is not a generator for N = {n}")))
        }
    }

    /// All generators, in the lexicographic order of their `Omega_ab`.
    pub fn all(n: usize) -> Vec<Self> {
        GeneratorIndex::all(n).into_iter().map(|g| Self::from_omega(g).1).collect()
    }

    /// Translation generators in tangent-basis order
    /// `P_(1)1..P_(1)N-1, P_(2)1..P_(2)N-1`.
    pub fn translations(n: usize) -> Vec<Self> {
        (1..n).map(Self::P1).chain((1..n).map(Self::P2)).collect()
    }
}

impl fmt::Display for RankTwoGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankTwoGenerator::J12 => write!(f, "J_(1)(2)"),
            RankTwoGenerator::P1(i) => write!(f, "P_(1){i}"),
            RankTwoGenerator::P2(i) => write!(f, "P_(2){i}"),
            RankTwoGenerator::J(i, j) => write!(f, "J_{i}{j}"),
        }
    }
}

/// Rank-adapted view of a signature.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RankTwoConstants<'a> {
    sig: &'a OmegaSignature,
}

impl<'a> RankTwoConstants<'a> {
    pub(crate) fn new(sig: &'a OmegaSignature) -> Self {
        Self { sig }
    }

    /// `k_(2) = w1`.
    pub(crate) fn k2(&self) -> f64 {
        self.sig.omegas()[0]
    }

    /// Curvature constant `k1 = w2`.
    pub(crate) fn k1(&self) -> f64 {
        self.sig.omegas()[1]
    }

    /// `k_ij = k_(i+1) ... k_j = w_(i+1)(j+1)` for `0 <= i <= j <= N-1`.
    pub(crate) fn kk(&self, i: usize, j: usize) -> f64 {
        self.sig.omegas()[i + 1..j + 1].iter().product()
    }
}

pub(crate) fn require_rank_two(n: usize) -> Result<()> {
    if n < 3 {
        return Err(CkError::UnsupportedDimension {
            n,
            reason: "rank-two spaces need N >= 3 (for N = 2 the rank drops to one)",
        });
    }
    Ok(())
}
