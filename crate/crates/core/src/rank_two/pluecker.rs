use nalgebra::DVector;

use super::bivector::{bivector_matrix, invariant_form_rank2};
use super::{require_rank_two, RankTwoConstants};
use crate::algebra::{GeneratorIndex, OmegaSignature};
use crate::error::{CkError, Result};
use crate::rank_one::WeierstrassPoint;
use crate::tolerance::Tolerances;
use crate::vector_rep::GroupElement;

/// Bivector coordinates `x^{ij}`, `i < j`, in lexicographic pair order.
#[derive(Debug, Clone, PartialEq)]
pub struct PlueckerPoint {
    pub coords: Vec<f64>,
}

impl PlueckerPoint {
    /// `N` such that `coords.len() = N(N+1)/2`, if the length is triangular.
    pub fn n(&self) -> Option<usize> {
        let d = self.coords.len();
        let n = (((8 * d + 1) as f64).sqrt() as usize).saturating_sub(1) / 2;
        (n * (n + 1) / 2 == d && n > 0).then_some(n)
    }

    fn get(&self, n: usize, i: usize, j: usize) -> f64 {
        self.coords[GeneratorIndex { a: i, b: j }.position(n)]
    }

    /// `x^T L0^(2) x - 1`.
    pub fn sphere_residual(&self, sig: &OmegaSignature) -> Result<f64> {
        let form = invariant_form_rank2(sig)?;
        check_len(form.nrows(), self.coords.len())?;
        Ok(quadratic(&form, &self.coords) - 1.0)
    }
}

/// Rank-two Beltrami chart `eta^i = x^{0,i+1}/x^01`, `xi^i = x^{1,i+1}/x^01`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankTwoBeltrami {
    pub eta: Vec<f64>,
    pub xi: Vec<f64>,
}

impl RankTwoBeltrami {
    pub fn origin(n: usize) -> Self {
        Self { eta: vec![0.0; n - 1], xi: vec![0.0; n - 1] }
    }

    /// Chart coordinates flattened as `(eta, xi)`.
    pub fn flatten(&self) -> Vec<f64> {
        self.eta.iter().chain(&self.xi).copied().collect()
    }

    pub fn from_flat(v: &[f64]) -> Self {
        let h = v.len() / 2;
        Self { eta: v[..h].to_vec(), xi: v[h..].to_vec() }
    }
}

/// Essential coordinates `x^{0j}` and `x^{1j}`, `j = 2..N`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankTwoEssentials {
    pub x0: Vec<f64>,
    pub x1: Vec<f64>,
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(CkError::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn quadratic(form: &nalgebra::DMatrix<f64>, x: &[f64]) -> f64 {
    let v = DVector::from_column_slice(x);
    v.dot(&(form * &v))
}

/// The origin line `x^01 = 1`.
pub fn pluecker_origin(n: usize) -> PlueckerPoint {
    let mut coords = vec![0.0; n * (n + 1) / 2];
    coords[0] = 1.0;
    PlueckerPoint { coords }
}

/// Normalised bivector `p ^ q` of the line through two points of `S^(1)`.
pub fn pluecker_from_line(
    p: &WeierstrassPoint,
    q: &WeierstrassPoint,
    sig: &OmegaSignature,
    tol: &Tolerances,
) -> Result<PlueckerPoint> {
    let n = sig.n();
    require_rank_two(n)?;
    check_len(n + 1, p.coords.len())?;
    check_len(n + 1, q.coords.len())?;
    for pt in [p, q] {
        let residual = pt.sphere_residual(sig);
        if residual.abs() > tol.constraint {
            return Err(CkError::ConstraintViolation { residual });
        }
    }
    let mut coords: Vec<f64> = GeneratorIndex::all(n)
        .into_iter()
        .map(|g| p.coords[g.a] * q.coords[g.b] - p.coords[g.b] * q.coords[g.a])
        .collect();
    if coords.iter().all(|x| x.abs() <= tol.constraint) {
        return Err(CkError::DegeneratePair);
    }
    let norm = quadratic(&invariant_form_rank2(sig)?, &coords);
    if norm <= tol.singular {
        return Err(CkError::NullNorm { norm });
    }
    let scale = norm.sqrt().recip() * if coords[0] < 0.0 { -1.0 } else { 1.0 };
    coords.iter_mut().for_each(|x| *x *= scale);
    Ok(PlueckerPoint { coords })
}

/// `x^{ij}x^{kl} - x^{ik}x^{jl} + x^{il}x^{jk}` for every `i < j < k < l`.
pub fn pluecker_residuals(x: &PlueckerPoint) -> Result<Vec<f64>> {
    let n = x.n().ok_or(CkError::DimensionMismatch {
        expected: 0,
        found: x.coords.len(),
    })?;
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    out.push(
                        x.get(n, i, j) * x.get(n, k, l) - x.get(n, i, k) * x.get(n, j, l)
                            + x.get(n, i, l) * x.get(n, j, k),
                    );
                }
            }
        }
    }
    Ok(out)
}

/// Solves the `01kl` Plücker relations together with the sphere equation for
/// the inessential coordinates, on the `x^01 > 0` patch containing the origin.
pub fn eliminate_inessential(
    sig: &OmegaSignature,
    essential: &RankTwoEssentials,
) -> Result<PlueckerPoint> {
    let n = sig.n();
    require_rank_two(n)?;
    check_len(n - 1, essential.x0.len())?;
    check_len(n - 1, essential.x1.len())?;
    let k = RankTwoConstants::new(sig);
    // u = (x^01)^2 solves u^2 - (1 - A) u + B = 0
    let mut a = 0.0;
    for i in 1..n {
        let (y0, y1) = (essential.x0[i - 1], essential.x1[i - 1]);
        a += k.kk(0, i) * (y0 * y0 + k.k2() * y1 * y1);
    }
    let mut b = 0.0;
    for i in 1..n {
        for j in i + 1..n {
            let c = essential.x0[i - 1] * essential.x1[j - 1]
                - essential.x0[j - 1] * essential.x1[i - 1];
            b += k.k2() * k.kk(0, i) * k.kk(0, j) * c * c;
        }
    }
    let disc = (1.0 - a).powi(2) - 4.0 * b;
    if disc < 0.0 {
        return Err(CkError::NoRealSolution);
    }
    let u = 0.5 * ((1.0 - a) + disc.sqrt());
    if u <= 0.0 {
        return Err(CkError::NoRealSolution);
    }
    let x01 = u.sqrt();
    let coords = GeneratorIndex::all(n)
        .into_iter()
        .map(|g| match (g.a, g.b) {
            (0, 1) => x01,
            (0, l) => essential.x0[l - 2],
            (1, l) => essential.x1[l - 2],
            (k, l) => {
                (essential.x0[k - 2] * essential.x1[l - 2]
                    - essential.x0[l - 2] * essential.x1[k - 2])
                    / x01
            }
        })
        .collect();
    Ok(PlueckerPoint { coords })
}

pub fn rank2_beltrami(x: &PlueckerPoint, tol: &Tolerances) -> Result<RankTwoBeltrami> {
    let n = x.n().ok_or(CkError::DimensionMismatch {
        expected: 0,
        found: x.coords.len(),
    })?;
    require_rank_two(n)?;
    let x01 = x.coords[0];
    if x01 <= tol.chart {
        return Err(CkError::ChartDomain { pivot: x01 });
    }
    Ok(RankTwoBeltrami {
        eta: (2..=n).map(|l| x.get(n, 0, l) / x01).collect(),
        xi: (2..=n).map(|l| x.get(n, 1, l) / x01).collect(),
    })
}

/// Inverse of [`rank2_beltrami`]: `x^01 = (1 + k1 |(eta,xi)|^2)^{-1/2}`.
pub fn rank2_beltrami_to_pluecker(
    sig: &OmegaSignature,
    pt: &RankTwoBeltrami,
    tol: &Tolerances,
) -> Result<PlueckerPoint> {
    let n = sig.n();
    require_rank_two(n)?;
    check_len(n - 1, pt.eta.len())?;
    check_len(n - 1, pt.xi.len())?;
    let k = RankTwoConstants::new(sig);
    let q = 1.0 + k.k1() * super::metric::chart_norm(sig, pt);
    if q <= tol.singular {
        return Err(CkError::SingularLocus { value: q });
    }
    let x01 = q.sqrt().recip();
    let coords = GeneratorIndex::all(n)
        .into_iter()
        .map(|g| match (g.a, g.b) {
            (0, 1) => 1.0,
            (0, l) => pt.eta[l - 2],
            (1, l) => pt.xi[l - 2],
            (k, l) => pt.eta[k - 2] * pt.xi[l - 2] - pt.eta[l - 2] * pt.xi[k - 2],
        })
        .map(|v| v * x01)
        .collect();
    Ok(PlueckerPoint { coords })
}

/// Bivector action `x -> M^(2) x` of a vector-representation element.
pub fn act_rank2(g: &GroupElement, x: &PlueckerPoint) -> Result<PlueckerPoint> {
    let m = bivector_matrix(g);
    check_len(m.ncols(), x.coords.len())?;
    let y = m * DVector::from_column_slice(&x.coords);
    Ok(PlueckerPoint { coords: y.as_slice().to_vec() })
}

/// Action of a group element on the rank-two Beltrami chart. Lines are
/// unoriented, so the image bivector is flipped onto the `x^01 > 0` patch.
pub fn act_rank2_beltrami(
    g: &GroupElement,
    pt: &RankTwoBeltrami,
    tol: &Tolerances,
) -> Result<RankTwoBeltrami> {
    let x = rank2_beltrami_to_pluecker(&g.signature, pt, tol)?;
    let mut y = act_rank2(g, &x)?;
    if y.coords[0] < 0.0 {
        y.coords.iter_mut().for_each(|c| *c = -*c);
    }
    rank2_beltrami(&y, tol)
}

/// `x^01 x^23 - x^02 x^13 + x^03 x^12`, defined for `N = 3` only.
pub fn grassmann_invariant(x: &PlueckerPoint) -> Result<f64> {
    match x.n() {
        Some(3) => Ok(x.get(3, 0, 1) * x.get(3, 2, 3) - x.get(3, 0, 2) * x.get(3, 1, 3)
            + x.get(3, 0, 3) * x.get(3, 1, 2)),
        Some(n) => Err(CkError::UnsupportedDimension {
            n,
            reason: "the extra Grassmannian invariant exists only for N = 3",
        }),
        None => Err(CkError::DimensionMismatch { expected: 6, found: x.coords.len() }),
    }
}
