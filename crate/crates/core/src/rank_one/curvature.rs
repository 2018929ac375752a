use super::charts::BeltramiPoint;
use super::metric::beltrami_metric;
use crate::algebra::OmegaSignature;
use crate::error::{CkError, Result};
use crate::geometry::{sectional_curvature, CurvatureOptions};
use crate::tolerance::Tolerances;
use crate::vector_rep::DenseMatrix;

/// The main metric of `S^(1)` is non-degenerate iff `k_2..k_N` are all non-zero.
pub fn is_nondegenerate_rank1(sig: &OmegaSignature) -> bool {
    sig.omegas()[1..].iter().all(|&w| w != 0.0)
}

/// Sectional curvature of the Beltrami-chart main metric at `eta` along the
/// plane spanned by the chart vectors `u`, `v`. Constant and equal to `k1`.
pub fn sectional_curvature_rank1(
    sig: &OmegaSignature,
    eta: &BeltramiPoint,
    u: &[f64],
    v: &[f64],
    opts: CurvatureOptions,
) -> Result<f64> {
    if !is_nondegenerate_rank1(sig) {
        return Err(CkError::DegenerateMetric);
    }
    let tol = Tolerances::default();
    let metric = |p: &[f64]| -> Result<DenseMatrix> {
        Ok(beltrami_metric(sig, &BeltramiPoint { coords: p.to_vec() }, &tol)?.matrix)
    };
    sectional_curvature(metric, &eta.coords, u, v, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(w: &[f64]) -> OmegaSignature {
        OmegaSignature::new(w.to_vec()).unwrap()
    }

    #[test]
    fn sphere_at_origin() {
        let s = sig(&[1.0, 1.0, 1.0]);
        let origin = BeltramiPoint { coords: vec![0.0; 3] };
        let k = sectional_curvature_rank1(&s, &origin, &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0], Default::default())
            .unwrap();
        assert!((k - 1.0).abs() < 1e-6, "{k}");
    }

    #[test]
    fn flat_space_is_flat() {
        let s = sig(&[0.0, -1.0, 1.0]);
        let p = BeltramiPoint { coords: vec![0.3, 0.2, -0.5] };
        let k = sectional_curvature_rank1(&s, &p, &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], Default::default())
            .unwrap();
        assert!(k.abs() < 1e-9);
    }

    #[test]
    fn degenerate_signature_is_refused() {
        let s = sig(&[1.0, 0.0, 1.0]);
        let p = BeltramiPoint { coords: vec![0.0; 3] };
        let err = sectional_curvature_rank1(&s, &p, &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], Default::default());
        assert_eq!(err, Err(CkError::DegenerateMetric));
    }
}
