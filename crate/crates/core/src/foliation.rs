//! Invariant foliations of degenerate Cayley-Klein spaces.

use std::fmt;

use crate::algebra::OmegaSignature;

/// A Cayley-Klein space named by its rank and constants.
///
/// Rank one renders as `S^{[w1]w2,...}`; rank two as `S^{w1[w2]w3,...}`,
/// the bracket marking the curvature constant.
#[derive(Debug, Clone, PartialEq)]
pub struct CkSpace {
    pub rank: u8,
    pub signature: OmegaSignature,
}

pub(crate) fn sign_char(w: f64) -> char {
    if w > 0.0 {
        '+'
    } else if w < 0.0 {
        '-'
    } else {
        '0'
    }
}

impl fmt::Display for CkSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: Vec<char> = self.signature.omegas().iter().map(|&w| sign_char(w)).collect();
        let curvature_at = if self.rank == 2 { 1 } else { 0 };
        write!(f, "S^{{")?;
        for (i, c) in signs.iter().enumerate() {
            if i == curvature_at {
                write!(f, "[{c}]")?;
            } else {
                if i > curvature_at + 1 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Which constant of a rank-two space a fiber belongs to: the leading
/// `k_(2) = w1` or one of `k_a = w_(a+1)`, `a = 2..N-1`. Rank-one spaces
/// only use [`FiberSelector::Index`] with `k_a = w_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberSelector {
    Second,
    Index(usize),
}

impl fmt::Display for FiberSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberSelector::Second => write!(f, "(2)"),
            FiberSelector::Index(a) => write!(f, "{a}"),
        }
    }
}

/// One invariant foliation: the vanishing constant, the space of leaves and
/// the model of each leaf.
#[derive(Debug, Clone, PartialEq)]
pub struct Foliation {
    pub position: FiberSelector,
    pub base: CkSpace,
    pub fiber: CkSpace,
}

/// All invariant foliations of a space, outermost first. Empty exactly when
/// the main metric is non-degenerate.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FoliationReport {
    pub foliations: Vec<Foliation>,
}

impl FoliationReport {
    pub fn is_empty(&self) -> bool {
        self.foliations.is_empty()
    }

    pub fn zero_positions(&self) -> Vec<FiberSelector> {
        self.foliations.iter().map(|f| f.position).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(rank: u8, w: &[f64]) -> CkSpace {
        CkSpace { rank, signature: OmegaSignature::new(w.to_vec()).unwrap() }
    }

    #[test]
    fn symbols() {
        assert_eq!(space(1, &[1.0, 0.0, 1.0, 1.0]).to_string(), "S^{[+]0,+,+}");
        assert_eq!(space(1, &[-1.0]).to_string(), "S^{[-]}");
        assert_eq!(space(2, &[0.0, -1.0, 1.0, 1.0]).to_string(), "S^{0[-]+,+}");
        assert_eq!(space(2, &[1.0, 1.0]).to_string(), "S^{+[+]}");
    }
}
