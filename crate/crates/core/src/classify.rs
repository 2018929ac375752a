//! Group structure of `SO_{w1..wN}(N+1)` and catalog names of its spaces.

use std::fmt;

use crate::algebra::OmegaSignature;
use crate::catalog::{Catalog, CatalogEntry, CatalogTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    /// All constants non-zero: a pseudo-orthogonal group `SO(p,q)`.
    Simple,
    /// Some constants vanish: iterated semidirect products.
    Semidirect,
    /// All constants vanish.
    Flag,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureKind::Simple => "simple",
            StructureKind::Semidirect => "semidirect",
            StructureKind::Flag => "flag",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationRecord {
    pub signature: OmegaSignature,
    /// Decomposition such as `SO(3,1)`, `T_4 ⊙ SO(3,1)` or
    /// `T_6 ⊙ (SO(3) ⊗ SO(2))`.
    pub structure: String,
    /// Conventional name (`ISO(p,q)`, `IISO(p,q)`, `I...ISO(1)`) when one exists.
    pub alias: Option<String>,
    pub kind: StructureKind,
    /// Numbers of positive, negative and zero entries of `diag(1, w01, ..., w0N)`.
    pub inertia: (usize, usize, usize),
    /// Raw `(p, q)` of each pseudo-orthogonal factor, in rendering order.
    pub factors: Vec<(usize, usize)>,
    pub rank_one: Option<CatalogEntry>,
    pub rank_two: Option<CatalogEntry>,
}

struct Structure {
    text: String,
    alias: Option<String>,
    factors: Vec<(usize, usize)>,
}

impl Structure {
    fn compound(&self) -> bool {
        self.text.contains('⊙') || self.text.contains('⊗')
    }

    fn wrapped(&self) -> String {
        if self.compound() {
            format!("({})", self.text)
        } else {
            self.text.clone()
        }
    }
}

fn render_so(p: usize, q: usize) -> String {
    let (hi, lo) = if p >= q { (p, q) } else { (q, p) };
    if lo == 0 {
        format!("SO({hi})")
    } else {
        format!("SO({hi},{lo})")
    }
}

/// `(p, q)` of `diag(1, w1, w1 w2, ...)` for constants that are all non-zero.
fn inertia_of(ws: &[f64]) -> (usize, usize, usize) {
    let mut counts = (1, 0, 0);
    let mut prod = 1.0;
    for &w in ws {
        prod *= w;
        if prod > 0.0 {
            counts.0 += 1;
        } else if prod < 0.0 {
            counts.1 += 1;
        } else {
            counts.2 += 1;
        }
    }
    counts
}

/// The `I`-prefixed name of `T_n ⊙ inner` when `inner` is itself `SO` or
/// an `I...SO` group.
fn inhomogeneous_alias(inner: &Structure) -> Option<String> {
    if !inner.compound() {
        Some(format!("I{}", inner.text))
    } else {
        inner.alias.as_ref().map(|a| format!("I{a}"))
    }
}

fn decompose(ws: &[f64]) -> Structure {
    let n = ws.len();
    let Some(a) = ws.iter().position(|&w| w == 0.0).map(|i| i + 1) else {
        let (p, q, _) = inertia_of(ws);
        return Structure { text: render_so(p, q), alias: None, factors: vec![(p, q)] };
    };
    if a == 1 || a == n {
        let inner = if a == 1 { decompose(&ws[1..]) } else { decompose(&ws[..n - 1]) };
        return Structure {
            text: format!("T_{n} ⊙ {}", inner.wrapped()),
            alias: inhomogeneous_alias(&inner),
            factors: inner.factors,
        };
    }
    let left = decompose(&ws[..a - 1]);
    let right = decompose(&ws[a..]);
    let mut factors = right.factors.clone();
    factors.extend(&left.factors);
    Structure {
        text: format!("T_{} ⊙ ({} ⊗ {})", a * (n + 1 - a), right.wrapped(), left.wrapped()),
        alias: None,
        factors,
    }
}

/// Classifies against the built-in catalog.
pub fn classify_group(sig: &OmegaSignature) -> ClassificationRecord {
    classify_with(sig, &Catalog::builtin())
}

pub fn classify_with(sig: &OmegaSignature, catalog: &Catalog) -> ClassificationRecord {
    let ws = sig.omegas();
    let s = decompose(ws);
    let kind = if ws.iter().all(|&w| w == 0.0) {
        StructureKind::Flag
    } else if ws.contains(&0.0) {
        StructureKind::Semidirect
    } else {
        StructureKind::Simple
    };
    ClassificationRecord {
        signature: sig.clone(),
        structure: s.text,
        alias: s.alias,
        kind,
        inertia: inertia_of(ws),
        factors: s.factors,
        rank_one: catalog.lookup(CatalogTable::RankOne, sig).cloned(),
        rank_two: catalog.lookup(CatalogTable::RankTwo, sig).cloned(),
    }
}

pub fn space_name_rank1(sig: &OmegaSignature) -> Option<CatalogEntry> {
    Catalog::builtin().lookup(CatalogTable::RankOne, sig).cloned()
}

pub fn space_name_rank2(sig: &OmegaSignature) -> Option<CatalogEntry> {
    Catalog::builtin().lookup(CatalogTable::RankTwo, sig).cloned()
}
