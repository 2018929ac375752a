//! Chart-level differential geometry by finite differences: Jacobians,
//! pullbacks, Christoffel symbols and sectional curvature of a metric given
//! as a function of chart coordinates.

#![allow(clippy::needless_range_loop)]

use crate::error::{CkError, Result};
use crate::vector_rep::DenseMatrix;

/// Coordinate chart a metric matrix is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    Beltrami,
    Parallel,
    Polar,
    /// Tangent space at the origin in the translation-generator basis.
    Origin,
}

impl Chart {
    pub fn name(self) -> &'static str {
        match self {
            Chart::Beltrami => "beltrami",
            Chart::Parallel => "parallel",
            Chart::Polar => "polar",
            Chart::Origin => "origin",
        }
    }
}

/// Symmetric metric matrix at a point, tagged with its chart.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricAtPoint {
    pub matrix: DenseMatrix,
    pub chart: Chart,
}

impl MetricAtPoint {
    pub fn new(matrix: DenseMatrix, chart: Chart) -> Self {
        Self { matrix, chart }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `g(u, v)`.
    pub fn inner(&self, u: &[f64], v: &[f64]) -> f64 {
        bilinear(&self.matrix, u, v)
    }
}

pub(crate) fn bilinear(m: &DenseMatrix, u: &[f64], v: &[f64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            acc += u[i] * m[(i, j)] * v[j];
        }
    }
    acc
}

/// Jacobian `df_i/dx_j` by the fourth-order central stencil.
pub fn jacobian<F>(f: F, x: &[f64], h: f64) -> Result<DenseMatrix>
where
    F: Fn(&[f64]) -> Result<Vec<f64>>,
{
    let n = x.len();
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut probe = x.to_vec();
    for j in 0..n {
        let mut at = |offset: f64| -> Result<Vec<f64>> {
            probe[j] = x[j] + offset;
            let out = f(&probe);
            probe[j] = x[j];
            out
        };
        let p2 = at(2.0 * h)?;
        let p1 = at(h)?;
        let m1 = at(-h)?;
        let m2 = at(-2.0 * h)?;
        cols.push(
            (0..p1.len())
                .map(|i| (-p2[i] + 8.0 * p1[i] - 8.0 * m1[i] + m2[i]) / (12.0 * h))
                .collect(),
        );
    }
    let rows = cols.first().map_or(0, Vec::len);
    Ok(DenseMatrix::from_fn(rows, n, |i, j| cols[j][i]))
}

/// `J^T G J`.
pub fn pullback(metric: &DenseMatrix, jac: &DenseMatrix) -> DenseMatrix {
    jac.transpose() * metric * jac
}

/// Settings for finite-difference curvature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureOptions {
    /// Base step of the central differences.
    pub step: f64,
    /// Combine steps `h` and `h/2` to cancel the `O(h^2)` error.
    pub richardson: bool,
    /// Minimum `|g(u,u) g(v,v) - g(u,v)^2|` for a usable plane.
    pub plane_tolerance: f64,
}

impl Default for CurvatureOptions {
    fn default() -> Self {
        Self { step: 1e-4, richardson: true, plane_tolerance: 1e-10 }
    }
}

/// Second-kind Christoffel symbols `Gamma[k][i][j] = Gamma^k_ij` at a point.
pub fn christoffel<F>(metric: &F, point: &[f64], h: f64) -> Result<Vec<Vec<Vec<f64>>>>
where
    F: Fn(&[f64]) -> Result<DenseMatrix>,
{
    let g = metric(point)?;
    let dg = first_derivatives(metric, point, h)?;
    christoffel_from(&g, &dg)
}

fn christoffel_from(g: &DenseMatrix, dg: &[DenseMatrix]) -> Result<Vec<Vec<Vec<f64>>>> {
    let n = g.nrows();
    let ginv = g.clone().try_inverse().ok_or(CkError::DegenerateMetric)?;
    // first kind: Gamma_{k ij} = (d_i g_jk + d_j g_ik - d_k g_ij) / 2
    let first = |k: usize, i: usize, j: usize| {
        0.5 * (dg[i][(j, k)] + dg[j][(i, k)] - dg[k][(i, j)])
    };
    let mut out = vec![vec![vec![0.0; n]; n]; n];
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                out[m][i][j] = (0..n).map(|k| ginv[(m, k)] * first(k, i, j)).sum();
            }
        }
    }
    Ok(out)
}

fn first_derivatives<F>(metric: &F, point: &[f64], h: f64) -> Result<Vec<DenseMatrix>>
where
    F: Fn(&[f64]) -> Result<DenseMatrix>,
{
    let n = point.len();
    let mut probe = point.to_vec();
    (0..n)
        .map(|k| {
            probe[k] = point[k] + h;
            let plus = metric(&probe)?;
            probe[k] = point[k] - h;
            let minus = metric(&probe)?;
            probe[k] = point[k];
            Ok((plus - minus) / (2.0 * h))
        })
        .collect()
}

fn second_derivatives<F>(metric: &F, point: &[f64], h: f64) -> Result<Vec<Vec<DenseMatrix>>>
where
    F: Fn(&[f64]) -> Result<DenseMatrix>,
{
    let n = point.len();
    let center = metric(point)?;
    let mut probe = point.to_vec();
    let mut eval = |dk: (usize, f64), dl: (usize, f64)| -> Result<DenseMatrix> {
        probe[dk.0] += dk.1;
        probe[dl.0] += dl.1;
        let out = metric(&probe);
        probe.copy_from_slice(point);
        out
    };
    let mut out = vec![vec![DenseMatrix::zeros(0, 0); n]; n];
    for k in 0..n {
        let plus = eval((k, h), (k, 0.0))?;
        let minus = eval((k, -h), (k, 0.0))?;
        out[k][k] = (plus - &center * 2.0 + minus) / (h * h);
        for l in k + 1..n {
            let pp = eval((k, h), (l, h))?;
            let pm = eval((k, h), (l, -h))?;
            let mp = eval((k, -h), (l, h))?;
            let mm = eval((k, -h), (l, -h))?;
            let d = (pp - pm - mp + mm) / (4.0 * h * h);
            out[l][k] = d.clone();
            out[k][l] = d;
        }
    }
    Ok(out)
}

/// Fully covariant Riemann tensor `R_abcd`, normalised so that
/// `R_abab = K (g_aa g_bb - g_ab^2)` on a space of constant curvature `K`.
pub fn riemann_lowered<F>(metric: &F, point: &[f64], h: f64) -> Result<Vec<f64>>
where
    F: Fn(&[f64]) -> Result<DenseMatrix>,
{
    let n = point.len();
    let g = metric(point)?;
    let dg = first_derivatives(metric, point, h)?;
    let ddg = second_derivatives(metric, point, h)?;
    let gamma = christoffel_from(&g, &dg)?;
    let idx = |a: usize, b: usize, c: usize, d: usize| ((a * n + b) * n + c) * n + d;
    let mut r = vec![0.0; n * n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let second = 0.5
                        * (ddg[b][c][(a, d)] + ddg[a][d][(b, c)]
                            - ddg[a][c][(b, d)]
                            - ddg[b][d][(a, c)]);
                    let mut quad = 0.0;
                    for e in 0..n {
                        for f in 0..n {
                            quad += g[(e, f)]
                                * (gamma[e][b][c] * gamma[f][a][d] - gamma[e][b][d] * gamma[f][a][c]);
                        }
                    }
                    r[idx(a, b, c, d)] = second + quad;
                }
            }
        }
    }
    Ok(r)
}

fn sectional_once<F>(metric: &F, point: &[f64], u: &[f64], v: &[f64], h: f64) -> Result<f64>
where
    F: Fn(&[f64]) -> Result<DenseMatrix>,
{
    let n = point.len();
    let r = riemann_lowered(metric, point, h)?;
    let g = metric(point)?;
    let mut num = 0.0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    num += r[((a * n + b) * n + c) * n + d] * u[a] * v[b] * u[c] * v[d];
                }
            }
        }
    }
    let gram = bilinear(&g, u, u) * bilinear(&g, v, v) - bilinear(&g, u, v).powi(2);
    Ok(num / gram)
}

/// Sectional curvature `<R(u,v)v,u> / (g(u,u) g(v,v) - g(u,v)^2)` of the
/// plane spanned by `u, v` at `point`.
pub fn sectional_curvature<F>(
    metric: F,
    point: &[f64],
    u: &[f64],
    v: &[f64],
    opts: CurvatureOptions,
) -> Result<f64>
where
    F: Fn(&[f64]) -> Result<DenseMatrix>,
{
    let n = point.len();
    if u.len() != n {
        return Err(CkError::DimensionMismatch { expected: n, found: u.len() });
    }
    if v.len() != n {
        return Err(CkError::DimensionMismatch { expected: n, found: v.len() });
    }
    let g = metric(point)?;
    let gram = bilinear(&g, u, u) * bilinear(&g, v, v) - bilinear(&g, u, v).powi(2);
    if gram.abs() <= opts.plane_tolerance {
        return Err(CkError::DegeneratePlane { value: gram });
    }
    let coarse = sectional_once(&metric, point, u, v, opts.step)?;
    if !opts.richardson {
        return Ok(coarse);
    }
    let fine = sectional_once(&metric, point, u, v, 0.5 * opts.step)?;
    Ok((4.0 * fine - coarse) / 3.0)
}
