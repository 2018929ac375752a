//! Named rank-one and rank-two spaces with `w3..wN > 0`, loaded from a
//! tab-separated data file. See `docs/catalog.md` for the format.

use std::fmt;
use std::str::FromStr;

use crate::algebra::OmegaSignature;
use crate::error::{CkError, Result};

const BUILTIN: &str = include_str!("../data/catalog.tsv");
const HEADER: &str = "# ckspaces catalog v1";
const COLUMNS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogTable {
    /// Rank-one spaces `S^{[w1]w2,+,...,+}`.
    RankOne,
    /// Rank-two spaces `S^{w1[w2]+,...,+}`.
    RankTwo,
}

impl FromStr for CatalogTable {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "I" => Ok(CatalogTable::RankOne),
            "II" => Ok(CatalogTable::RankTwo),
            other => Err(format!("unknown table {other:?}")),
        }
    }
}

/// Sign class of a constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Zero,
    Negative,
}

impl Sign {
    pub fn of(w: f64) -> Self {
        if w > 0.0 {
            Sign::Positive
        } else if w < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" => Ok(Sign::Positive),
            "0" => Ok(Sign::Zero),
            "-" => Ok(Sign::Negative),
            other => Err(format!("unknown sign {other:?}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Sign::Positive => '+',
            Sign::Zero => '0',
            Sign::Negative => '-',
        };
        write!(f, "{c}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub table: CatalogTable,
    pub omega1: Sign,
    pub omega2: Sign,
    pub name: String,
    pub symbol: String,
    pub coset: String,
    pub curvature: String,
    pub foliation: bool,
    pub base: Option<String>,
    pub fiber: Option<String>,
}

impl CatalogEntry {
    pub fn foliation_label(&self) -> &'static str {
        if self.foliation {
            "Invariant Foliation"
        } else {
            "No Invariant Foliation"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

fn optional(s: &str) -> Option<String> {
    (s != "-").then(|| s.to_string())
}

impl Catalog {
    /// The catalog compiled into the library.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("built-in catalog is well formed")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, first)) if first.trim_end() == HEADER => {}
            _ => {
                return Err(CkError::Catalog { line: 1, message: format!("expected {HEADER:?}") })
            }
        }
        let mut entries = Vec::new();
        for (idx, raw) in lines {
            let line = idx + 1;
            let err = |message: String| CkError::Catalog { line, message };
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = raw.split('\t').collect();
            if f.len() != COLUMNS {
                return Err(err(format!("expected {COLUMNS} fields, found {}", f.len())));
            }
            let foliation = match f[7] {
                "Invariant Foliation" => true,
                "No Invariant Foliation" => false,
                other => return Err(err(format!("unknown foliation flag {other:?}"))),
            };
            entries.push(CatalogEntry {
                table: f[0].parse().map_err(err)?,
                omega1: f[1].parse().map_err(err)?,
                omega2: f[2].parse().map_err(err)?,
                name: f[3].to_string(),
                symbol: f[4].to_string(),
                coset: f[5].to_string(),
                curvature: f[6].to_string(),
                foliation,
                base: optional(f[8]),
                fiber: optional(f[9]),
            });
        }
        Ok(Self { entries })
    }

    /// Entry for a signature `(w1, w2, +, ..., +)`; `None` when the tail is
    /// not all positive or `N` is too small for the table.
    pub fn lookup(&self, table: CatalogTable, sig: &OmegaSignature) -> Option<&CatalogEntry> {
        let w = sig.omegas();
        let min_n = match table {
            CatalogTable::RankOne => 2,
            CatalogTable::RankTwo => 3,
        };
        if w.len() < min_n || w[2..].iter().any(|&x| x <= 0.0) {
            return None;
        }
        let (s1, s2) = (Sign::of(w[0]), Sign::of(w[1]));
        self.entries.iter().find(|e| e.table == table && e.omega1 == s1 && e.omega2 == s2)
    }
}
