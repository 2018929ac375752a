//! The involutions `Theta^(m)` and the Cartan splittings `p^(m) + h^(m)`.

use crate::algebra::{GeneratorIndex, OmegaSignature};
use crate::error::{CkError, Result};

/// Sign of `Theta^(m)` on `Omega_ab`: `-1` inside the rectangle `a < m <= b`.
pub fn theta_sign(m: usize, g: GeneratorIndex) -> i32 {
    if g.a < m && g.b >= m {
        -1
    } else {
        1
    }
}

/// Sign of the composite involution `Theta^(m1) ... Theta^(mk)`.
pub fn theta_product_sign(ms: &[usize], g: GeneratorIndex) -> i32 {
    ms.iter().map(|&m| theta_sign(m, g)).product()
}

/// Anti-invariant (`p`) and invariant (`h`) generators of `Theta^(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanSplit {
    pub m: usize,
    pub p_generators: Vec<GeneratorIndex>,
    pub h_generators: Vec<GeneratorIndex>,
}

impl CartanSplit {
    pub fn in_p(&self, g: GeneratorIndex) -> bool {
        theta_sign(self.m, g) < 0
    }
}

fn check_m(n: usize, m: usize) -> Result<()> {
    if m == 0 || m > n {
        return Err(CkError::IndexOutOfRange { index: m, n });
    }
    Ok(())
}

pub fn cartan_split(sig: &OmegaSignature, m: usize) -> Result<CartanSplit> {
    check_m(sig.n(), m)?;
    let (p, h) = GeneratorIndex::all(sig.n()).into_iter().partition(|&g| theta_sign(m, g) < 0);
    Ok(CartanSplit { m, p_generators: p, h_generators: h })
}

/// Signatures of the two summands
/// `h^(m) = so_{w1..w(m-1)}(m) + so_{w(m+1)..wN}(N+1-m)`.
/// `None` stands for the trivial algebra `so(1)`.
pub fn h_subalgebra_signatures(
    sig: &OmegaSignature,
    m: usize,
) -> Result<(Option<OmegaSignature>, Option<OmegaSignature>)> {
    check_m(sig.n(), m)?;
    Ok((sig.slice(1, m - 1), sig.slice(m + 1, sig.n())))
}

/// Number of independent invariants of a pair of elements of `S^(m)`.
pub fn rank_of_space(n: usize, m: usize) -> Result<usize> {
    check_m(n, m)?;
    Ok(m.min(n + 1 - m))
}

/// `dim S^(m) = m (N + 1 - m)`.
pub fn space_dimension(n: usize, m: usize) -> usize {
    m * (n + 1 - m)
}
