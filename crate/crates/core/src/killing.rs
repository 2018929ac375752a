//! Adjoint representation and the Killing-Cartan trace form.

use crate::algebra::{algebra_dimension, bracket, GeneratorIndex, OmegaSignature};
use crate::vector_rep::DenseMatrix;

/// `ad X` in the lexicographic generator basis. Column `h` holds the
/// coefficients of `[X, h]`.
pub fn adjoint_matrix(sig: &OmegaSignature, g: GeneratorIndex) -> DenseMatrix {
    let n = sig.n();
    let d = algebra_dimension(n);
    let mut m = DenseMatrix::zeros(d, d);
    for (col, h) in GeneratorIndex::all(n).into_iter().enumerate() {
        for (c, k) in bracket(sig, g, h).terms {
            m[(k.position(n), col)] += c;
        }
    }
    m
}

/// `g(X, Y) = Tr(ad X ad Y)`.
pub fn killing_form(sig: &OmegaSignature, g1: GeneratorIndex, g2: GeneratorIndex) -> f64 {
    (adjoint_matrix(sig, g1) * adjoint_matrix(sig, g2)).trace()
}

/// Full trace-form matrix over the lexicographic basis.
pub fn killing_matrix(sig: &OmegaSignature) -> DenseMatrix {
    let gens = GeneratorIndex::all(sig.n());
    let ads: Vec<DenseMatrix> = gens.iter().map(|&g| adjoint_matrix(sig, g)).collect();
    let d = gens.len();
    DenseMatrix::from_fn(d, d, |i, j| (&ads[i] * &ads[j]).trace())
}

/// `diag(-2(N-1) w_ab)`, the value the trace form takes in the generator basis.
pub fn killing_closed_form(sig: &OmegaSignature) -> DenseMatrix {
    let n = sig.n();
    let scale = -2.0 * (n as f64 - 1.0);
    let diag: Vec<f64> = GeneratorIndex::all(n).into_iter().map(|g| scale * sig.pair(g)).collect();
    DenseMatrix::from_diagonal(&nalgebra::DVector::from_vec(diag))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: usize, b: usize) -> GeneratorIndex {
        GeneratorIndex::new(a, b).unwrap()
    }

    #[test]
    fn one_dimensional_algebra_has_zero_adjoint() {
        let s = OmegaSignature::new(vec![1.0]).unwrap();
        assert_eq!(adjoint_matrix(&s, g(0, 1)), DenseMatrix::zeros(1, 1));
    }

    #[test]
    fn so3_adjoint_of_first_generator() {
        let s = OmegaSignature::new(vec![1.0, 1.0]).unwrap();
        let ad = adjoint_matrix(&s, g(0, 1));
        // [O01,O02] = O12 and [O01,O12] = -O02, lexicographic basis (01,02,12)
        let expected =
            DenseMatrix::from_row_slice(3, 3, &[0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0]);
        assert_eq!(ad, expected);
    }

    #[test]
    fn killing_values() {
        let s = OmegaSignature::new(vec![1.0, 1.0]).unwrap();
        assert_eq!(killing_form(&s, g(0, 1), g(0, 1)), -2.0);
        assert_eq!(killing_form(&s, g(0, 1), g(1, 2)), 0.0);
        assert_eq!(killing_matrix(&s), DenseMatrix::identity(3, 3) * -2.0);

        let s = OmegaSignature::new(vec![0.0, 1.0]).unwrap();
        assert_eq!(killing_form(&s, g(0, 1), g(0, 1)), 0.0);
    }
}
