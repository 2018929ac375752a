use nalgebra::DVector;

use super::bivector::invariant_form_rank2;
use super::pluecker::{rank2_beltrami_to_pluecker, RankTwoBeltrami};
use super::{require_rank_two, RankTwoConstants};
use crate::algebra::OmegaSignature;
use crate::error::{CkError, Result};
use crate::foliation::{CkSpace, FiberSelector, Foliation, FoliationReport};
use crate::geometry::{jacobian, pullback, sectional_curvature, Chart, CurvatureOptions, MetricAtPoint};
use crate::tolerance::Tolerances;
use crate::vector_rep::DenseMatrix;

const JACOBIAN_STEP: f64 = 1e-3;

/// The chart vector `v = (eta, xi, eta^i xi^j - eta^j xi^i)` with its weights
/// `(k_1i, k_(2) k_1i, k_(2) k_1i k_0j)` and Jacobian `dv/d(eta, xi)`.
struct ChartVector {
    v: Vec<f64>,
    weights: Vec<f64>,
    jac: DenseMatrix,
}

fn chart_vector(sig: &OmegaSignature, pt: &RankTwoBeltrami) -> ChartVector {
    let k = RankTwoConstants::new(sig);
    let m = pt.eta.len();
    let mut v = Vec::new();
    let mut weights = Vec::new();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for i in 0..m {
        v.push(pt.eta[i]);
        weights.push(k.kk(1, i + 1));
        let mut r = vec![0.0; 2 * m];
        r[i] = 1.0;
        rows.push(r);
    }
    for i in 0..m {
        v.push(pt.xi[i]);
        weights.push(k.k2() * k.kk(1, i + 1));
        let mut r = vec![0.0; 2 * m];
        r[m + i] = 1.0;
        rows.push(r);
    }
    for i in 0..m {
        for j in i + 1..m {
            v.push(pt.eta[i] * pt.xi[j] - pt.eta[j] * pt.xi[i]);
            weights.push(k.k2() * k.kk(1, i + 1) * k.kk(0, j + 1));
            let mut r = vec![0.0; 2 * m];
            r[i] += pt.xi[j];
            r[m + j] += pt.eta[i];
            r[j] -= pt.xi[i];
            r[m + i] -= pt.eta[j];
            rows.push(r);
        }
    }
    let jac = DenseMatrix::from_fn(rows.len(), 2 * m, |r, c| rows[r][c]);
    ChartVector { v, weights, jac }
}

/// `|(eta, xi)|^2_k`, including the cross terms.
pub(crate) fn chart_norm(sig: &OmegaSignature, pt: &RankTwoBeltrami) -> f64 {
    let cv = chart_vector(sig, pt);
    cv.v.iter().zip(&cv.weights).map(|(x, w)| w * x * x).sum()
}

fn block_diagonal(sig: &OmegaSignature, k2: f64) -> DenseMatrix {
    let k = RankTwoConstants::new(sig);
    let m = sig.n() - 1;
    let entries: Vec<f64> = (1..=m)
        .map(|i| k.kk(1, i))
        .chain((1..=m).map(|i| k2 * k.kk(1, i)))
        .collect();
    DenseMatrix::from_diagonal(&DVector::from_vec(entries))
}

/// `L^(2) = diag(Pi, k_(2) Pi)`, `Pi = diag(1, k_12, ..., k_1,N-1)`, in the
/// basis `P_(1)1..P_(1)N-1, P_(2)1..P_(2)N-1`.
pub fn metric_at_origin_rank2(sig: &OmegaSignature) -> Result<MetricAtPoint> {
    require_rank_two(sig.n())?;
    let k2 = RankTwoConstants::new(sig).k2();
    Ok(MetricAtPoint::new(block_diagonal(sig, k2), Chart::Origin))
}

/// Main metric in the rank-two Beltrami chart:
/// `[(1 + k1|v|^2) |dv|^2 - k1 <v|dv>^2] / (1 + k1|v|^2)^2`.
pub fn rank2_metric(
    sig: &OmegaSignature,
    pt: &RankTwoBeltrami,
    tol: &Tolerances,
) -> Result<MetricAtPoint> {
    let n = sig.n();
    require_rank_two(n)?;
    for len in [pt.eta.len(), pt.xi.len()] {
        if len != n - 1 {
            return Err(CkError::DimensionMismatch { expected: n - 1, found: len });
        }
    }
    let k1 = RankTwoConstants::new(sig).k1();
    let cv = chart_vector(sig, pt);
    let w = DenseMatrix::from_diagonal(&DVector::from_vec(cv.weights.clone()));
    let norm: f64 = cv.v.iter().zip(&cv.weights).map(|(x, w)| w * x * x).sum();
    let q = 1.0 + k1 * norm;
    if q.abs() <= tol.singular {
        return Err(CkError::SingularLocus { value: q });
    }
    let flat = pullback(&w, &cv.jac);
    let b = cv.jac.transpose() * (&w * DVector::from_vec(cv.v));
    let m = (flat * q - &b * b.transpose() * k1) / (q * q);
    Ok(MetricAtPoint::new(m, Chart::Beltrami))
}

/// `g_(2)^(2) = diag(k_1i)` on `P_(2)i`, or for `a = 2..N-1`
/// `g_a^(2) = diag(k_ai; k_(2) k_ai)` on `P_(1)i, P_(2)i`, `i = a..N-1`.
pub fn subsidiary_metric_rank2(
    sig: &OmegaSignature,
    which: FiberSelector,
) -> Result<MetricAtPoint> {
    let n = sig.n();
    require_rank_two(n)?;
    let k = RankTwoConstants::new(sig);
    let entries: Vec<f64> = match which {
        FiberSelector::Second => (1..n).map(|i| k.kk(1, i)).collect(),
        FiberSelector::Index(a) if (2..n).contains(&a) => (a..n)
            .map(|i| k.kk(a, i))
            .chain((a..n).map(|i| k.k2() * k.kk(a, i)))
            .collect(),
        FiberSelector::Index(a) => {
            return Err(CkError::InvalidSelector(format!(
                "fiber index {a} not in (2) or 2..={}",
                n - 1
            )))
        }
    };
    Ok(MetricAtPoint::new(DenseMatrix::from_diagonal(&DVector::from_vec(entries)), Chart::Origin))
}

/// Foliations from vanishing `k_(2)` (listed first) and vanishing `k_a`,
/// `a = 2..N-1`, ascending.
pub fn foliation_report_rank2(sig: &OmegaSignature) -> Result<FoliationReport> {
    let n = sig.n();
    require_rank_two(n)?;
    let w = sig.omegas();
    let space = |rank: u8, ws: Vec<f64>| CkSpace {
        rank,
        signature: OmegaSignature::new(ws).expect("non-empty"),
    };
    let mut foliations = Vec::new();
    if w[0] == 0.0 {
        let mut fiber = vec![0.0];
        fiber.extend_from_slice(&w[2..]);
        foliations.push(Foliation {
            position: FiberSelector::Second,
            base: space(1, w[1..].to_vec()),
            fiber: space(1, fiber),
        });
    }
    for a in 2..n {
        if w[a] == 0.0 {
            let mut fiber = w[..2].to_vec();
            fiber.extend_from_slice(&w[a + 1..]);
            foliations.push(Foliation {
                position: FiberSelector::Index(a),
                base: space(2, w[..a].to_vec()),
                fiber: space(2, fiber),
            });
        }
    }
    Ok(FoliationReport { foliations })
}

/// The main metric is non-degenerate iff `k_(2)` and `k_2..k_N-1` are non-zero.
pub fn is_nondegenerate_rank2(sig: &OmegaSignature) -> bool {
    let w = sig.omegas();
    w[0] != 0.0 && w[2..].iter().all(|&x| x != 0.0)
}

/// Sectional curvature of the main metric at the origin for the plane spanned
/// by `u`, `v` in the basis `P_(1)i, P_(2)i`.
pub fn sectional_curvature_rank2_origin(
    sig: &OmegaSignature,
    u: &[f64],
    v: &[f64],
    opts: CurvatureOptions,
) -> Result<f64> {
    require_rank_two(sig.n())?;
    if !is_nondegenerate_rank2(sig) {
        return Err(CkError::DegenerateMetric);
    }
    let tol = Tolerances::default();
    let metric = |p: &[f64]| -> Result<DenseMatrix> {
        Ok(rank2_metric(sig, &RankTwoBeltrami::from_flat(p), &tol)?.matrix)
    };
    sectional_curvature(metric, &RankTwoBeltrami::origin(sig.n()).flatten(), u, v, opts)
}

/// Max-norm of `J^T L0^(2) J - k1 g(pt)`, `J` the numerical Jacobian of the
/// chart embedding into bivector space.
pub fn ambient_pullback_check_rank2(sig: &OmegaSignature, pt: &RankTwoBeltrami) -> Result<f64> {
    let tol = Tolerances::default();
    let f = |x: &[f64]| -> Result<Vec<f64>> {
        Ok(rank2_beltrami_to_pluecker(sig, &RankTwoBeltrami::from_flat(x), &tol)?.coords)
    };
    let j = jacobian(f, &pt.flatten(), JACOBIAN_STEP)?;
    let ambient = pullback(&invariant_form_rank2(sig)?, &j);
    let chart = rank2_metric(sig, pt, &tol)?.matrix * RankTwoConstants::new(sig).k1();
    Ok((ambient - chart).amax())
}
