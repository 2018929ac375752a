//! The abstract Cayley-Klein algebra `so_{w1..wN}(N+1)`.
//!
//! Generators are `Omega_ab` with `0 <= a < b <= N`. All brackets are
//! determined by the `N` constants `w1..wN` through the two-index products
//! `w_ab = w_{a+1} ... w_b`.

use std::fmt;

use crate::error::{CkError, Result};

/// Labeled cosine: circular for `omega > 0`, parabolic for `omega = 0`,
/// hyperbolic for `omega < 0`.
pub fn ck_cosine(omega: f64, x: f64) -> f64 {
    if omega > 0.0 {
        (omega.sqrt() * x).cos()
    } else if omega < 0.0 {
        ((-omega).sqrt() * x).cosh()
    } else {
        1.0
    }
}

/// Labeled sine, companion of [`ck_cosine`]. `Sk'(0) = 1` for every `omega`.
pub fn ck_sine(omega: f64, x: f64) -> f64 {
    if omega > 0.0 {
        let s = omega.sqrt();
        (s * x).sin() / s
    } else if omega < 0.0 {
        let s = (-omega).sqrt();
        (s * x).sinh() / s
    } else {
        x
    }
}

/// The constants `w1..wN` selecting one member of the Cayley-Klein family.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaSignature {
    omegas: Vec<f64>,
}

impl OmegaSignature {
    pub fn new(omegas: Vec<f64>) -> Result<Self> {
        if omegas.is_empty() {
            return Err(CkError::InvalidSignature("need at least one constant".into()));
        }
        if let Some(bad) = omegas.iter().find(|w| !w.is_finite()) {
            return Err(CkError::InvalidSignature(format!("non-finite constant {bad}")));
        }
        Ok(Self { omegas })
    }

    /// The `N` of `SO_{w1..wN}(N+1)`.
    pub fn n(&self) -> usize {
        self.omegas.len()
    }

    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    /// `w_a` for `1 <= a <= N`.
    pub fn omega(&self, a: usize) -> Result<f64> {
        if a == 0 || a > self.n() {
            return Err(CkError::IndexOutOfRange { index: a, n: self.n() });
        }
        Ok(self.omegas[a - 1])
    }

    /// Two-index constant `w_ab = w_{a+1} w_{a+2} ... w_b`, equal to 1 when `a == b`.
    pub fn omega_product(&self, a: usize, b: usize) -> Result<f64> {
        if b > self.n() {
            return Err(CkError::IndexOutOfRange { index: b, n: self.n() });
        }
        if a > b {
            return Err(CkError::IndexOutOfRange { index: a, n: self.n() });
        }
        Ok(self.omegas[a..b].iter().product())
    }

    /// `w_ab` for a generator already known to be valid for this signature.
    pub fn pair(&self, g: GeneratorIndex) -> f64 {
        self.omegas[g.a..g.b].iter().product()
    }

    /// Diagonal of the invariant form of the vector representation:
    /// `(1, w_01, w_02, ..., w_0N)`.
    pub fn ambient_weights(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.n() + 1);
        let mut acc = 1.0;
        out.push(acc);
        for w in &self.omegas {
            acc *= w;
            out.push(acc);
        }
        out
    }

    /// Scale every constant to `+1`, `0` or `-1`.
    pub fn canonical(&self) -> Self {
        Self {
            omegas: self
                .omegas
                .iter()
                .map(|&w| if w > 0.0 { 1.0 } else if w < 0.0 { -1.0 } else { 0.0 })
                .collect(),
        }
    }

    /// All `3^N` signatures with constants in `{+1, 0, -1}`.
    pub fn canonical_family(n: usize) -> Vec<Self> {
        let count = 3usize.pow(n as u32);
        (0..count)
            .map(|mut code| {
                let omegas = (0..n)
                    .map(|_| {
                        let w = [1.0, 0.0, -1.0][code % 3];
                        code /= 3;
                        w
                    })
                    .collect();
                Self { omegas }
            })
            .collect()
    }

    /// The signature `(w_{lo}, ..., w_{hi})`, or `None` when the range is empty.
    pub fn slice(&self, lo: usize, hi: usize) -> Option<Self> {
        if lo == 0 || lo > hi || hi > self.n() {
            return None;
        }
        Some(Self { omegas: self.omegas[lo - 1..hi].to_vec() })
    }
}

impl fmt::Display for OmegaSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.omegas.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Dimension `N(N+1)/2` of the algebra.
pub fn algebra_dimension(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Index pair `(a,b)`, `a < b`, naming the generator `Omega_ab`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorIndex {
    pub a: usize,
    pub b: usize,
}

impl GeneratorIndex {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a >= b {
            return Err(CkError::InvalidGenerator { a, b });
        }
        Ok(Self { a, b })
    }

    /// Checks `b <= N` in addition to `a < b`.
    pub fn checked(a: usize, b: usize, n: usize) -> Result<Self> {
        if a >= b || b > n {
            return Err(CkError::InvalidGenerator { a, b });
        }
        Ok(Self { a, b })
    }

    /// Every generator of `so(N+1)` in lexicographic order
    /// `(0,1) < (0,2) < ... < (N-1,N)`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(algebra_dimension(n));
        for a in 0..n {
            for b in a + 1..=n {
                out.push(Self { a, b });
            }
        }
        out
    }

    /// Position of this generator in [`GeneratorIndex::all`].
    pub fn position(self, n: usize) -> usize {
        // rows 0..a contribute N, N-1, ..., N-a+1 entries
        self.a * n - self.a * (self.a.saturating_sub(1)) / 2 + (self.b - self.a - 1)
    }

    pub fn shares_index(self, other: Self) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }

    pub fn contains(self, i: usize) -> bool {
        self.a == i || self.b == i
    }

    /// Rank-one label: `P_i` for `Omega_0i`, `J_ij` otherwise.
    pub fn rank_one_label(self) -> String {
        if self.a == 0 {
            format!("P_{}", self.b)
        } else {
            format!("J_{}{}", self.a, self.b)
        }
    }
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Omega_{}{}", self.a, self.b)
    }
}

/// Result of a bracket of basis generators, kept as a formal linear
/// combination. Brackets of basis elements have at most one term.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BracketResult {
    pub terms: Vec<(f64, GeneratorIndex)>,
}

impl BracketResult {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    fn single(coefficient: f64, g: GeneratorIndex) -> Self {
        if coefficient == 0.0 {
            Self::zero()
        } else {
            Self { terms: vec![(coefficient, g)] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(c, _)| *c == 0.0)
    }

    pub fn scaled(mut self, s: f64) -> Self {
        for t in &mut self.terms {
            t.0 *= s;
        }
        self.terms.retain(|(c, _)| *c != 0.0);
        self
    }

    /// Coefficients in the lexicographic basis of `so(N+1)`.
    pub fn coefficients(&self, n: usize) -> Vec<f64> {
        let mut out = vec![0.0; algebra_dimension(n)];
        for &(c, g) in &self.terms {
            out[g.position(n)] += c;
        }
        out
    }

    /// Linear extension of the bracket: `[self, g]`.
    pub fn bracket_with(&self, sig: &OmegaSignature, g: GeneratorIndex) -> BracketResult {
        let mut terms: Vec<(f64, GeneratorIndex)> = Vec::new();
        for &(c, h) in &self.terms {
            for (d, k) in bracket(sig, h, g).terms {
                match terms.iter_mut().find(|(_, t)| *t == k) {
                    Some(slot) => slot.0 += c * d,
                    None => terms.push((c * d, k)),
                }
            }
        }
        terms.retain(|(c, _)| *c != 0.0);
        Self { terms }
    }
}

/// Lie bracket of two basis generators.
///
/// For `a < b < c`:
/// `[O_ab, O_ac] = w_ab O_bc`, `[O_ab, O_bc] = -O_ac`, `[O_ac, O_bc] = w_bc O_ab`.
/// Generators with no common index commute.
pub fn bracket(sig: &OmegaSignature, g1: GeneratorIndex, g2: GeneratorIndex) -> BracketResult {
    if g1 == g2 || !g1.shares_index(g2) {
        return BracketResult::zero();
    }
    let mut idx = [g1.a, g1.b, g2.a, g2.b];
    idx.sort_unstable();
    // exactly one index is shared, so the sorted quadruple has one repeat
    let (x, y, z) = match idx {
        [p, q, r, s] if p == q => (p, r, s),
        [p, q, r, s] if q == r => (p, q, s),
        [p, q, r, _] => (p, q, r),
    };
    let xy = GeneratorIndex { a: x, b: y };
    let xz = GeneratorIndex { a: x, b: z };
    let yz = GeneratorIndex { a: y, b: z };

    let (coefficient, target, swapped) = if (g1, g2) == (xy, xz) || (g2, g1) == (xy, xz) {
        (sig.pair(xy), yz, g1 != xy)
    } else if (g1, g2) == (xy, yz) || (g2, g1) == (xy, yz) {
        (-1.0, xz, g1 != xy)
    } else {
        (sig.pair(yz), xy, g1 != xz)
    };
    let coefficient = if swapped { -coefficient } else { coefficient };
    BracketResult::single(coefficient, target)
}
