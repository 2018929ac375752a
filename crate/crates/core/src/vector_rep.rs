//! Fundamental `(N+1)`-dimensional representation and its one-parameter
//! subgroups.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ck_cosine, ck_sine, BracketResult, GeneratorIndex, OmegaSignature};

/// Dense real matrix used for representations and metric tensors.
pub type DenseMatrix = DMatrix<f64>;

/// `Omega_ab -> -w_ab e_ab + e_ba`.
pub fn vector_generator(sig: &OmegaSignature, g: GeneratorIndex) -> DenseMatrix {
    let dim = sig.n() + 1;
    let mut m = DenseMatrix::zeros(dim, dim);
    m[(g.a, g.b)] = -sig.pair(g);
    m[(g.b, g.a)] = 1.0;
    m
}

/// Matrix of a formal combination of generators.
pub fn vector_matrix_of(sig: &OmegaSignature, x: &BracketResult) -> DenseMatrix {
    let dim = sig.n() + 1;
    x.terms.iter().fold(DenseMatrix::zeros(dim, dim), |acc, &(c, g)| {
        acc + vector_generator(sig, g) * c
    })
}

/// `diag(1, w_01, w_02, ..., w_0N)`, preserved by the vector representation.
pub fn invariant_form_rank1(sig: &OmegaSignature) -> DenseMatrix {
    DenseMatrix::from_diagonal(&nalgebra::DVector::from_vec(sig.ambient_weights()))
}

/// Element of a Cayley-Klein group in a concrete matrix representation.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    pub matrix: DenseMatrix,
    pub signature: OmegaSignature,
}

impl GroupElement {
    pub fn identity(sig: &OmegaSignature) -> Self {
        let dim = sig.n() + 1;
        Self { matrix: DenseMatrix::identity(dim, dim), signature: sig.clone() }
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement { matrix: &self.matrix * &other.matrix, signature: self.signature.clone() }
    }

    /// Max-norm of `M^T L M - L` for the supplied invariant form `L`.
    pub fn invariance_residual(&self, form: &DenseMatrix) -> f64 {
        (self.matrix.transpose() * form * &self.matrix - form).amax()
    }
}

/// Closed form of `exp(x Omega_ab)`:
/// identity off the `(a,b)` plane, `Ck(x)` on the diagonal of the plane and
/// `Sk(x) (-w_ab e_ab + e_ba)` off it, both labeled by `w_ab`.
pub fn one_param_subgroup(sig: &OmegaSignature, g: GeneratorIndex, x: f64) -> GroupElement {
    let w = sig.pair(g);
    let c = ck_cosine(w, x);
    let s = ck_sine(w, x);
    let mut el = GroupElement::identity(sig);
    let m = &mut el.matrix;
    m[(g.a, g.a)] = c;
    m[(g.b, g.b)] = c;
    m[(g.a, g.b)] = -w * s;
    m[(g.b, g.a)] = s;
    el
}

/// One letter of a random word: a generator and its parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WordLetter {
    pub generator: GeneratorIndex,
    pub parameter: f64,
}

/// Deterministic random word of one-parameter subgroup elements with
/// parameters uniform in `[-1, 1]`.
pub fn random_word(sig: &OmegaSignature, seed: u64, word_length: usize) -> Vec<WordLetter> {
    let gens = GeneratorIndex::all(sig.n());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..word_length)
        .map(|_| WordLetter {
            generator: gens[rng.random_range(0..gens.len())],
            parameter: rng.random_range(-1.0..=1.0),
        })
        .collect()
}

/// Product of the one-parameter subgroups of [`random_word`], left to right.
pub fn random_group_element(sig: &OmegaSignature, seed: u64, word_length: usize) -> GroupElement {
    random_word(sig, seed, word_length.max(1))
        .into_iter()
        .fold(GroupElement::identity(sig), |acc, l| {
            acc.compose(&one_param_subgroup(sig, l.generator, l.parameter))
        })
}

/// Commutator `XY - YX`.
pub fn commutator(x: &DenseMatrix, y: &DenseMatrix) -> DenseMatrix {
    x * y - y * x
}
