use crate::algebra::{ck_cosine, ck_sine, GeneratorIndex, OmegaSignature};
use crate::error::{CkError, Result};
use crate::tolerance::Tolerances;
use crate::vector_rep::{one_param_subgroup, GroupElement};

/// Weierstrass (ambient) coordinates `(x^0, ..., x^N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassPoint {
    pub coords: Vec<f64>,
}

impl WeierstrassPoint {
    /// `(x^0)^2 + sum_l w_0l (x^l)^2 - 1`.
    pub fn sphere_residual(&self, sig: &OmegaSignature) -> f64 {
        let q: f64 = sig
            .ambient_weights()
            .iter()
            .zip(&self.coords)
            .map(|(w, x)| w * x * x)
            .sum();
        q - 1.0
    }
}

/// Projective chart `eta^i = x^i / x^0`.
#[derive(Debug, Clone, PartialEq)]
pub struct BeltramiPoint {
    pub coords: Vec<f64>,
}

/// Geodesic parallel coordinates: `exp(a1 P1) ... exp(aN PN) O`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParallelCoords {
    pub coords: Vec<f64>,
}

/// Geodesic polar coordinates:
/// `exp(thN J_{N-1,N}) ... exp(th2 J_12) exp(th1 P1) O`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarCoords {
    pub coords: Vec<f64>,
}

pub fn origin(n: usize) -> WeierstrassPoint {
    let mut coords = vec![0.0; n + 1];
    coords[0] = 1.0;
    WeierstrassPoint { coords }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(CkError::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Linear action of a vector-representation element.
pub fn act(g: &GroupElement, p: &WeierstrassPoint, tol: &Tolerances) -> Result<WeierstrassPoint> {
    let dim = g.matrix.nrows();
    check_len(dim, p.coords.len())?;
    let residual = p.sphere_residual(&g.signature);
    if residual.abs() > tol.constraint {
        return Err(CkError::ConstraintViolation { residual });
    }
    let v = &g.matrix * nalgebra::DVector::from_column_slice(&p.coords);
    Ok(WeierstrassPoint { coords: v.as_slice().to_vec() })
}

pub fn parallel_to_weierstrass(sig: &OmegaSignature, a: &ParallelCoords) -> Result<WeierstrassPoint> {
    let n = sig.n();
    check_len(n, a.coords.len())?;
    let w = sig.ambient_weights();
    // suffix[i] = prod_{l=i..N} Ck_{w_0l}(a^l)
    let mut suffix = vec![1.0; n + 2];
    for l in (1..=n).rev() {
        suffix[l] = suffix[l + 1] * ck_cosine(w[l], a.coords[l - 1]);
    }
    let mut coords = vec![0.0; n + 1];
    coords[0] = suffix[1];
    for i in 1..=n {
        coords[i] = ck_sine(w[i], a.coords[i - 1]) * suffix[i + 1];
    }
    Ok(WeierstrassPoint { coords })
}

pub fn polar_to_weierstrass(sig: &OmegaSignature, theta: &PolarCoords) -> Result<WeierstrassPoint> {
    let n = sig.n();
    check_len(n, theta.coords.len())?;
    let mut v = nalgebra::DVector::from_column_slice(&origin(n).coords);
    for (k, &t) in theta.coords.iter().enumerate() {
        // k = 0 is the radial P_1; k >= 1 rotates with J_{k,k+1}
        let g = GeneratorIndex { a: k, b: k + 1 };
        v = one_param_subgroup(sig, g, t).matrix * v;
    }
    Ok(WeierstrassPoint { coords: v.as_slice().to_vec() })
}

pub fn weierstrass_to_beltrami(p: &WeierstrassPoint, tol: &Tolerances) -> Result<BeltramiPoint> {
    let x0 = p.coords[0];
    if x0.abs() <= tol.chart {
        return Err(CkError::ChartDomain { pivot: x0 });
    }
    Ok(BeltramiPoint { coords: p.coords[1..].iter().map(|x| x / x0).collect() })
}

/// Inverse of [`weierstrass_to_beltrami`] on the `x^0 > 0` patch.
pub fn beltrami_to_weierstrass(
    sig: &OmegaSignature,
    eta: &BeltramiPoint,
    tol: &Tolerances,
) -> Result<WeierstrassPoint> {
    check_len(sig.n(), eta.coords.len())?;
    let w = sig.ambient_weights();
    let q: f64 = 1.0 + eta.coords.iter().zip(&w[1..]).map(|(e, w)| w * e * e).sum::<f64>();
    if q <= tol.singular {
        return Err(CkError::SingularLocus { value: q });
    }
    let x0 = q.sqrt().recip();
    let mut coords = Vec::with_capacity(sig.n() + 1);
    coords.push(x0);
    coords.extend(eta.coords.iter().map(|e| e * x0));
    Ok(WeierstrassPoint { coords })
}

/// Fractional-linear action of a group element on the Beltrami chart.
pub fn act_beltrami(g: &GroupElement, eta: &BeltramiPoint, tol: &Tolerances) -> Result<BeltramiPoint> {
    let p = beltrami_to_weierstrass(&g.signature, eta, tol)?;
    weierstrass_to_beltrami(&act(g, &p, tol)?, tol)
}
