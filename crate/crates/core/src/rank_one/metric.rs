use nalgebra::DVector;

use super::charts::{
    parallel_to_weierstrass, polar_to_weierstrass,
    weierstrass_to_beltrami, BeltramiPoint, ParallelCoords, PolarCoords,
};
use crate::algebra::{ck_cosine, OmegaSignature};
use crate::error::{CkError, Result};
use crate::foliation::{CkSpace, FiberSelector, Foliation, FoliationReport};
use crate::geometry::{jacobian, pullback, Chart, MetricAtPoint};
use crate::tolerance::Tolerances;
use crate::vector_rep::{invariant_form_rank1, DenseMatrix};

const JACOBIAN_STEP: f64 = 1e-3;

/// Weights `(1, k_12, ..., k_1N)` of the tangent inner product `<a|b>_k`.
fn tangent_weights(sig: &OmegaSignature) -> Vec<f64> {
    let n = sig.n();
    (1..=n).map(|i| sig.omega_product(1, i).expect("1 <= i <= N")).collect()
}

fn diagonal(entries: Vec<f64>) -> DenseMatrix {
    DenseMatrix::from_diagonal(&DVector::from_vec(entries))
}

/// `diag(1, k_12, k_13, ..., k_1N)` in the basis `P_1..P_N`.
pub fn metric_at_origin_rank1(sig: &OmegaSignature) -> MetricAtPoint {
    MetricAtPoint::new(diagonal(tangent_weights(sig)), Chart::Origin)
}

/// Main metric in Beltrami coordinates:
/// `[(1 + k1|eta|^2) |d eta|^2 - k1 <eta|d eta>^2] / (1 + k1|eta|^2)^2`.
pub fn beltrami_metric(
    sig: &OmegaSignature,
    eta: &BeltramiPoint,
    tol: &Tolerances,
) -> Result<MetricAtPoint> {
    let n = sig.n();
    if eta.coords.len() != n {
        return Err(CkError::DimensionMismatch { expected: n, found: eta.coords.len() });
    }
    let k1 = sig.omegas()[0];
    let w = tangent_weights(sig);
    let weta: Vec<f64> = w.iter().zip(&eta.coords).map(|(w, e)| w * e).collect();
    let norm: f64 = weta.iter().zip(&eta.coords).map(|(a, b)| a * b).sum();
    let q = 1.0 + k1 * norm;
    if q.abs() <= tol.singular {
        return Err(CkError::SingularLocus { value: q });
    }
    let m = DenseMatrix::from_fn(n, n, |i, j| {
        let flat = if i == j { q * w[i] } else { 0.0 };
        (flat - k1 * weta[i] * weta[j]) / (q * q)
    });
    Ok(MetricAtPoint::new(m, Chart::Beltrami))
}

/// Main metric in geodesic parallel coordinates (diagonal).
pub fn parallel_metric(sig: &OmegaSignature, a: &ParallelCoords) -> Result<MetricAtPoint> {
    let n = sig.n();
    if a.coords.len() != n {
        return Err(CkError::DimensionMismatch { expected: n, found: a.coords.len() });
    }
    let w0 = sig.ambient_weights();
    let w1 = tangent_weights(sig);
    // tail[i] = prod_{l=i..N} Ck^2_{k_0l}(a^l)
    let mut tail = vec![1.0; n + 2];
    for l in (1..=n).rev() {
        tail[l] = tail[l + 1] * ck_cosine(w0[l], a.coords[l - 1]).powi(2);
    }
    let entries = (1..=n).map(|i| w1[i - 1] * tail[i + 1]).collect();
    Ok(MetricAtPoint::new(diagonal(entries), Chart::Parallel))
}

/// Main metric in geodesic polar coordinates, pulled back from the Beltrami
/// chart through the polar parametrisation.
pub fn polar_metric(
    sig: &OmegaSignature,
    theta: &PolarCoords,
    tol: &Tolerances,
) -> Result<MetricAtPoint> {
    let to_beltrami = |t: &[f64]| -> Result<Vec<f64>> {
        let p = polar_to_weierstrass(sig, &PolarCoords { coords: t.to_vec() })?;
        Ok(weierstrass_to_beltrami(&p, tol)?.coords)
    };
    let eta = BeltramiPoint { coords: to_beltrami(&theta.coords)? };
    let g = beltrami_metric(sig, &eta, tol)?;
    let j = jacobian(to_beltrami, &theta.coords, JACOBIAN_STEP)?;
    Ok(MetricAtPoint::new(pullback(&g.matrix, &j), Chart::Polar))
}

/// Metric `g_a(P_i, P_j) = delta_ij k_ai` on the fiber directions `P_a..P_N`.
pub fn subsidiary_metric_rank1(sig: &OmegaSignature, a: usize) -> Result<MetricAtPoint> {
    let n = sig.n();
    if a < 2 || a > n {
        return Err(CkError::InvalidSelector(format!("fiber index {a} not in 2..={n}")));
    }
    let entries = (a..=n).map(|i| sig.omega_product(a, i).expect("a <= i <= N")).collect();
    Ok(MetricAtPoint::new(diagonal(entries), Chart::Origin))
}

/// One foliation per vanishing `k_a`, `a = 2..N`, outermost (smallest `a`)
/// first. Leaves of `k_a = 0` are `S^{[0]k_{a+1}..k_N}` over the base
/// `S^{[k1]k_2..k_{a-1}}`.
pub fn foliation_report_rank1(sig: &OmegaSignature) -> FoliationReport {
    let n = sig.n();
    let foliations = (2..=n)
        .filter(|&a| sig.omegas()[a - 1] == 0.0)
        .map(|a| {
            let base = sig.slice(1, a - 1).expect("a >= 2");
            let mut fiber = vec![0.0];
            fiber.extend_from_slice(&sig.omegas()[a..]);
            Foliation {
                position: FiberSelector::Index(a),
                base: CkSpace { rank: 1, signature: base },
                fiber: CkSpace {
                    rank: 1,
                    signature: OmegaSignature::new(fiber).expect("non-empty"),
                },
            }
        })
        .collect();
    FoliationReport { foliations }
}

/// Max-norm of `J^T L0 J - k1 g_parallel(a)`, `J` the numerical Jacobian of
/// the parallel parametrisation of the sphere.
pub fn ambient_pullback_check_rank1(sig: &OmegaSignature, a: &ParallelCoords) -> Result<f64> {
    let f = |x: &[f64]| -> Result<Vec<f64>> {
        Ok(parallel_to_weierstrass(sig, &ParallelCoords { coords: x.to_vec() })?.coords)
    };
    let j = jacobian(f, &a.coords, JACOBIAN_STEP)?;
    let ambient = pullback(&invariant_form_rank1(sig), &j);
    let chart = parallel_metric(sig, a)?.matrix * sig.omegas()[0];
    Ok((ambient - chart).amax())
}

/// Chart transition from geodesic parallel to Beltrami coordinates.
pub fn parallel_to_beltrami(
    sig: &OmegaSignature,
    a: &[f64],
    tol: &Tolerances,
) -> Result<Vec<f64>> {
    let p = parallel_to_weierstrass(sig, &ParallelCoords { coords: a.to_vec() })?;
    Ok(weierstrass_to_beltrami(&p, tol)?.coords)
}
