//! Test-side oracles, written independently of the library code paths.
#![allow(dead_code)]

use ckspaces::{DenseMatrix, GeneratorIndex, OmegaSignature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn sig(w: &[f64]) -> OmegaSignature {
    OmegaSignature::new(w.to_vec()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Real signature with entries uniform in `[-2, 2]`.
pub fn random_signature(rng: &mut ChaCha8Rng, n: usize) -> OmegaSignature {
    OmegaSignature::new((0..n).map(|_| rng.random_range(-2.0..2.0)).collect()).unwrap()
}

/// Integer signature with entries in `{-2, ..., 2}`; products stay exact.
pub fn integer_signature(rng: &mut ChaCha8Rng, n: usize) -> OmegaSignature {
    OmegaSignature::new((0..n).map(|_| rng.random_range(-2i32..=2) as f64).collect()).unwrap()
}

pub fn uniform_vec(rng: &mut ChaCha8Rng, len: usize, r: f64) -> Vec<f64> {
    (0..len).map(|_| rng.random_range(-r..r)).collect()
}

/// `w_a+1 * ... * w_b`, computed directly from the list.
pub fn omega_ab(sig: &OmegaSignature, a: usize, b: usize) -> f64 {
    sig.omegas()[a..b].iter().product()
}

/// Coefficients (lexicographic basis) of `[Omega_g1, Omega_g2]` from the three
/// nonzero bracket rules; disjoint indices commute.
pub fn bracket_oracle(sig: &OmegaSignature, g1: GeneratorIndex, g2: GeneratorIndex) -> Vec<f64> {
    let n = sig.n();
    let mut out = vec![0.0; n * (n + 1) / 2];
    let pos = |a: usize, b: usize| GeneratorIndex { a, b }.position(n);
    let mut put = |c: f64, a: usize, b: usize| out[pos(a, b)] += c;
    let (p, q) = ((g1.a, g1.b), (g2.a, g2.b));
    // rules for a < b < c, each applied in both orders with opposite sign
    for (x, y, s) in [(p, q, 1.0), (q, p, -1.0)] {
        let ((a1, b1), (a2, b2)) = (x, y);
        if a1 == a2 && b1 < b2 {
            // [Omega_ab, Omega_ac] = w_ab Omega_bc
            put(s * omega_ab(sig, a1, b1), b1, b2);
        } else if b1 == a2 {
            // [Omega_ab, Omega_bc] = -Omega_ac
            put(-s, a1, b2);
        } else if b1 == b2 && a1 < a2 {
            // [Omega_ac, Omega_bc] = w_bc Omega_ab
            put(s * omega_ab(sig, a2, b1), a1, a2);
        }
    }
    out
}

/// Reads the coefficients of `X = sum c_ab Omega_ab` from its vector-representation
/// matrix: the `(b, a)` entry of `Omega_ab` is 1 and no other generator touches it.
pub fn coefficients_of(m: &DenseMatrix, n: usize) -> Vec<f64> {
    GeneratorIndex::all(n).into_iter().map(|g| m[(g.b, g.a)]).collect()
}

/// Matrix exponential by scaling and squaring of a Taylor series.
pub fn series_exp(a: &DenseMatrix) -> DenseMatrix {
    let norm = a.abs().row_sum().max();
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let b = a / 2f64.powi(s);
    let dim = a.nrows();
    let mut sum = DenseMatrix::identity(dim, dim);
    let mut term = DenseMatrix::identity(dim, dim);
    for k in 1..60 {
        term = &term * &b / k as f64;
        sum += &term;
        if term.amax() < 1e-18 {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// Action of a vector-representation generator on antisymmetric tensors
/// `p ^ q -> Xp ^ q + p ^ Xq`, in the lexicographic pair basis.
pub fn antisymmetrized_square(x: &DenseMatrix) -> DenseMatrix {
    let n = x.nrows() - 1;
    let pairs = GeneratorIndex::all(n);
    let d = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
    DenseMatrix::from_fn(pairs.len(), pairs.len(), |r, c| {
        let (i, j) = (pairs[r].a, pairs[r].b);
        let (k, l) = (pairs[c].a, pairs[c].b);
        x[(i, k)] * d(l, j) - x[(i, l)] * d(k, j) + d(i, k) * x[(j, l)] - d(i, l) * x[(j, k)]
    })
}

/// Numerical pullback check for a chart action: returns
/// `max |J^T G(f(p)) J - G(p)|` with `J` a central-difference Jacobian of `f`.
pub fn pullback_defect<F, G>(f: F, metric: G, p: &[f64], h: f64) -> Option<f64>
where
    F: Fn(&[f64]) -> Option<Vec<f64>>,
    G: Fn(&[f64]) -> Option<DenseMatrix>,
{
    let dim = p.len();
    let fp = f(p)?;
    let mut jac = DenseMatrix::zeros(fp.len(), dim);
    for j in 0..dim {
        let shifted = |t: f64| {
            let mut x = p.to_vec();
            x[j] += t;
            f(&x)
        };
        let (p2, p1, m1, m2) = (shifted(2.0 * h)?, shifted(h)?, shifted(-h)?, shifted(-2.0 * h)?);
        for i in 0..fp.len() {
            jac[(i, j)] = (-p2[i] + 8.0 * p1[i] - 8.0 * m1[i] + m2[i]) / (12.0 * h);
        }
    }
    let lhs = jac.transpose() * metric(&fp)? * &jac;
    Some((lhs - metric(p)?).amax())
}
