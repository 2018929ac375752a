use nalgebra::DVector;

use super::{require_rank_two, RankTwoConstants, RankTwoGenerator};
use crate::algebra::{GeneratorIndex, OmegaSignature};
use crate::error::Result;
use crate::vector_rep::{one_param_subgroup, DenseMatrix, GroupElement};

/// Accumulates `coeff * e_{(ij),(kl)}` into a bivector matrix whose rows and
/// columns are index pairs in lexicographic order.
struct PairMatrix {
    n: usize,
    m: DenseMatrix,
}

impl PairMatrix {
    fn zeros(n: usize) -> Self {
        let d = n * (n + 1) / 2;
        Self { n, m: DenseMatrix::zeros(d, d) }
    }

    fn add(&mut self, row: (usize, usize), col: (usize, usize), coeff: f64) {
        let r = GeneratorIndex { a: row.0, b: row.1 }.position(self.n);
        let c = GeneratorIndex { a: col.0, b: col.1 }.position(self.n);
        self.m[(r, c)] += coeff;
    }
}

/// Matrix of a rank-adapted generator acting on bivectors `x^{ij}`, `i < j`.
pub fn bivector_generator(sig: &OmegaSignature, gen: RankTwoGenerator) -> Result<DenseMatrix> {
    let n = sig.n();
    require_rank_two(n)?;
    gen.validate(n)?;
    let k = RankTwoConstants::new(sig);
    let mut e = PairMatrix::zeros(n);
    match gen {
        RankTwoGenerator::J12 => {
            for s in 2..=n {
                e.add((0, s), (1, s), k.k2());
                e.add((1, s), (0, s), -1.0);
            }
        }
        RankTwoGenerator::P1(j) => {
            let c = k.kk(0, j);
            let p = j + 1;
            for s in j + 2..=n {
                e.add((1, s), (p, s), -c);
                e.add((p, s), (1, s), 1.0);
            }
            e.add((0, 1), (0, p), -c);
            e.add((0, p), (0, 1), 1.0);
            for s in 2..=j {
                e.add((1, s), (s, p), c);
                e.add((s, p), (1, s), -1.0);
            }
        }
        RankTwoGenerator::P2(j) => {
            let c = k.k2() * k.kk(0, j);
            let p = j + 1;
            for s in j + 2..=n {
                e.add((0, s), (p, s), -c);
                e.add((p, s), (0, s), 1.0);
            }
            for s in 1..=j {
                e.add((0, s), (s, p), c);
                e.add((s, p), (0, s), -1.0);
            }
        }
        RankTwoGenerator::J(i, j) => {
            let c = k.kk(i, j);
            let (p, q) = (i + 1, j + 1);
            for s in j + 2..=n {
                e.add((p, s), (q, s), -c);
                e.add((q, s), (p, s), 1.0);
            }
            for s in 0..=i {
                e.add((s, p), (s, q), -c);
                e.add((s, q), (s, p), 1.0);
            }
            for s in i + 2..=j {
                e.add((p, s), (s, q), c);
                e.add((s, q), (p, s), -1.0);
            }
        }
    }
    Ok(e.m)
}

/// Diagonal form `L0^(2)` on bivectors, invariant under the bivector action:
/// `1` on `x^01`, `k_0i` on `x^{0,i+1}`, `k_(2) k_0i` on `x^{1,i+1}` and
/// `k_(2) k_0i k_0j` on `x^{i+1,j+1}`.
pub fn invariant_form_rank2(sig: &OmegaSignature) -> Result<DenseMatrix> {
    let n = sig.n();
    require_rank_two(n)?;
    let k = RankTwoConstants::new(sig);
    let diag: Vec<f64> = GeneratorIndex::all(n)
        .into_iter()
        .map(|g| match (g.a, g.b) {
            (0, 1) => 1.0,
            (0, b) => k.kk(0, b - 1),
            (1, b) => k.k2() * k.kk(0, b - 1),
            (a, b) => k.k2() * k.kk(0, a - 1) * k.kk(0, b - 1),
        })
        .collect();
    Ok(DenseMatrix::from_diagonal(&DVector::from_vec(diag)))
}

/// Second compound `M^(2)` of a vector-representation matrix:
/// `M^(2)_{(ij),(kl)} = M_ik M_jl - M_il M_jk`.
pub fn bivector_matrix(g: &GroupElement) -> DenseMatrix {
    let m = &g.matrix;
    let n = m.nrows() - 1;
    let pairs = GeneratorIndex::all(n);
    DenseMatrix::from_fn(pairs.len(), pairs.len(), |r, c| {
        let (i, j) = (pairs[r].a, pairs[r].b);
        let (k, l) = (pairs[c].a, pairs[c].b);
        m[(i, k)] * m[(j, l)] - m[(i, l)] * m[(j, k)]
    })
}

/// `exp(x gen)` in the bivector representation.
pub fn bivector_one_param_subgroup(
    sig: &OmegaSignature,
    gen: RankTwoGenerator,
    x: f64,
) -> Result<DenseMatrix> {
    require_rank_two(sig.n())?;
    gen.validate(sig.n())?;
    let (sign, g) = gen.to_omega();
    Ok(bivector_matrix(&one_param_subgroup(sig, g, sign * x)))
}
