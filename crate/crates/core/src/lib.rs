//! Orthogonal Cayley-Klein algebras `so_{w1..wN}(N+1)`, their groups, and
//! the symmetric homogeneous spaces of rank one and rank two.
//!
//! Signatures are lists of real constants `w1..wN`; the canonical values
//! `+1, 0, -1` select the 3^N members of the family up to rescaling.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod foliation;
pub mod geometry;
pub mod involutions;
pub mod killing;
pub mod rank_one;
pub mod rank_two;
pub mod tolerance;
pub mod vector_rep;

pub use algebra::{
    algebra_dimension, bracket, ck_cosine, ck_sine, BracketResult, GeneratorIndex, OmegaSignature,
};
pub use catalog::{Catalog, CatalogEntry, CatalogTable, Sign};
pub use classify::{
    classify_group, classify_with, space_name_rank1, space_name_rank2, ClassificationRecord,
    StructureKind,
};
pub use error::{CkError, Result};
pub use foliation::{CkSpace, FiberSelector, Foliation, FoliationReport};
pub use geometry::{Chart, CurvatureOptions, MetricAtPoint};
pub use involutions::{cartan_split, theta_sign, CartanSplit};
pub use killing::{killing_closed_form, killing_form, killing_matrix};
pub use rank_one::{BeltramiPoint, ParallelCoords, PolarCoords, WeierstrassPoint};
pub use rank_two::{PlueckerPoint, RankTwoBeltrami, RankTwoEssentials, RankTwoGenerator};
pub use tolerance::Tolerances;
pub use vector_rep::{
    one_param_subgroup, random_group_element, vector_generator, DenseMatrix, GroupElement,
};
