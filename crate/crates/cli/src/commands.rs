use ckspaces::rank_one::{
    beltrami_metric, foliation_report_rank1, is_nondegenerate_rank1, parallel_metric,
    sectional_curvature_rank1, subsidiary_metric_rank1,
};
use ckspaces::rank_two::{
    foliation_report_rank2, is_nondegenerate_rank2, rank2_metric, sectional_curvature_rank2_origin,
    subsidiary_metric_rank2,
};
use ckspaces::*;
use std::result::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::report::{matrix, num, nums, Obj, Report};
use crate::{ChartArg, CliError, SpaceArg};

fn entry(e: &Option<CatalogEntry>) -> Value {
    match e {
        None => Value::Null,
        Some(e) => Obj::new()
            .set("name", e.name.as_str())
            .set("symbol", e.symbol.as_str())
            .set("coset", e.coset.as_str())
            .set("curvature", e.curvature.as_str())
            .set("foliation", e.foliation_label())
            .set("base", e.base.clone().map_or(Value::Null, Value::from))
            .set("fiber", e.fiber.clone().map_or(Value::Null, Value::from))
            .into(),
    }
}

fn foliations(r: &FoliationReport) -> Value {
    Value::Array(
        r.foliations
            .iter()
            .map(|f| {
                Obj::new()
                    .set("position", f.position.to_string())
                    .set("base", f.base.to_string())
                    .set("fiber", f.fiber.to_string())
                    .into()
            })
            .collect(),
    )
}

pub fn classify(sig: &OmegaSignature) -> Report {
    let rec = classify_group(sig);
    let kind = match rec.kind {
        StructureKind::Simple => "simple",
        StructureKind::Semidirect => "semidirect",
        StructureKind::Flag => "flag",
    };
    let (p, q, z) = rec.inertia;
    let factors: Vec<Value> = rec.factors.iter().map(|&(p, q)| Value::from(vec![p, q])).collect();
    let rank_two_foliation = foliation_report_rank2(sig).map_or(Value::Null, |r| foliations(&r));
    let payload = Obj::new()
        .set("structure", rec.structure.as_str())
        .set("alias", rec.alias.clone().map_or(Value::Null, Value::from))
        .set("kind", kind)
        .set("inertia", Obj::new().set("positive", p).set("negative", q).set("zero", z))
        .set("factors", factors)
        .set("rank_one", entry(&rec.rank_one))
        .set("rank_two", entry(&rec.rank_two))
        .set(
            "foliation",
            Obj::new().set("rank_one", foliations(&foliation_report_rank1(sig))).set("rank_two", rank_two_foliation),
        );
    Report { command: "classify", signature: sig.omegas().to_vec(), payload: payload.into() }
}

fn expect_len(point: &[f64], want: usize) -> Result<(), CliError> {
    if point.len() == want {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--point needs {want} coordinates, got {}", point.len())))
    }
}

pub fn metric(
    sig: &OmegaSignature,
    space: SpaceArg,
    chart: ChartArg,
    point: Option<Vec<f64>>,
    tol: &Tolerances,
) -> Result<Report, CliError> {
    let n = sig.n();
    let (g, p, report, subsidiary) = match space {
        SpaceArg::Rank1 => {
            let p = point.unwrap_or_else(|| vec![0.0; n]);
            expect_len(&p, n)?;
            let g = match chart {
                ChartArg::Beltrami => beltrami_metric(sig, &BeltramiPoint { coords: p.clone() }, tol)?,
                ChartArg::Parallel => parallel_metric(sig, &ParallelCoords { coords: p.clone() })?,
            };
            let report = foliation_report_rank1(sig);
            let mut subs = Vec::new();
            for f in &report.foliations {
                if let FiberSelector::Index(a) = f.position {
                    subs.push((f, subsidiary_metric_rank1(sig, a)?));
                }
            }
            let subs = subs.into_iter().map(|(f, m)| subsidiary(f, &m)).collect::<Vec<_>>();
            (g, p, report, subs)
        }
        SpaceArg::Rank2 => {
            if chart != ChartArg::Beltrami {
                return Err(CliError::Usage("rank-two metrics are available in the beltrami chart only".into()));
            }
            if n < 3 {
                return Err(CliError::Usage("rank-two spaces need at least three constants".into()));
            }
            let p = point.unwrap_or_else(|| vec![0.0; 2 * (n - 1)]);
            expect_len(&p, 2 * (n - 1))?;
            let g = rank2_metric(sig, &RankTwoBeltrami::from_flat(&p), tol)?;
            let report = foliation_report_rank2(sig)?;
            let mut subs = Vec::new();
            for f in &report.foliations {
                subs.push(subsidiary(f, &subsidiary_metric_rank2(sig, f.position)?));
            }
            (g, p, report, subs)
        }
    };
    let payload = Obj::new()
        .set("space", space.name())
        .set("chart", chart.name())
        .set("point", nums(&p))
        .set("metric", matrix(&g.matrix))
        .set("degenerate", !report.is_empty())
        .set("foliation", foliations(&report))
        .set("subsidiary", subsidiary);
    Ok(Report { command: "metric", signature: sig.omegas().to_vec(), payload: payload.into() })
}

fn subsidiary(f: &Foliation, m: &MetricAtPoint) -> Value {
    Obj::new()
        .set("position", f.position.to_string())
        .set("leaf", f.fiber.to_string())
        .set("metric", matrix(&m.matrix))
        .into()
}

struct Sample {
    plane: String,
    u: Vec<f64>,
    v: Vec<f64>,
    value: Result<f64, CkError>,
    expected: f64,
}

fn unit(dim: usize, i: usize) -> Vec<f64> {
    let mut e = vec![0.0; dim];
    e[i] = 1.0;
    e
}

pub fn curvature(
    sig: &OmegaSignature,
    space: SpaceArg,
    point: Option<Vec<f64>>,
    samples: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<Report, CliError> {
    let n = sig.n();
    let opts = CurvatureOptions::default();
    let mut out = Vec::new();
    let p = match space {
        SpaceArg::Rank1 => {
            if !is_nondegenerate_rank1(sig) {
                return Err(CkError::DegenerateMetric.into());
            }
            let p = point.unwrap_or_else(|| vec![0.0; n]);
            expect_len(&p, n)?;
            let eta = BeltramiPoint { coords: p.clone() };
            let g = beltrami_metric(sig, &eta, tol)?;
            let w1 = sig.omegas()[0];
            for i in 0..n {
                for j in i + 1..n {
                    let (u, v) = (unit(n, i), unit(n, j));
                    let value = sectional_curvature_rank1(sig, &eta, &u, &v, opts);
                    out.push(Sample { plane: format!("e{}^e{}", i + 1, j + 1), u, v, value, expected: w1 });
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut k, mut attempts) = (0, 0);
            while k < samples && n >= 2 && attempts < 1000 * samples {
                attempts += 1;
                let u: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
                let v: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
                let gram = g.inner(&u, &u) * g.inner(&v, &v) - g.inner(&u, &v).powi(2);
                if gram.abs() < 0.1 {
                    continue;
                }
                let value = sectional_curvature_rank1(sig, &eta, &u, &v, opts);
                k += 1;
                out.push(Sample { plane: format!("random {k}"), u, v, value, expected: w1 });
            }
            p
        }
        SpaceArg::Rank2 => {
            if n < 3 {
                return Err(CliError::Usage("rank-two spaces need at least three constants".into()));
            }
            if point.as_ref().is_some_and(|p| p.iter().any(|x| *x != 0.0)) {
                return Err(CliError::Usage("rank-two curvature is sampled at the origin only".into()));
            }
            if !is_nondegenerate_rank2(sig) {
                return Err(CkError::DegenerateMetric.into());
            }
            let (m, dim, w2) = (n - 1, 2 * (n - 1), sig.omegas()[1]);
            for i in 0..m {
                for j in 0..m {
                    let (u, v) = (unit(dim, i), unit(dim, m + j));
                    let value = sectional_curvature_rank2_origin(sig, &u, &v, opts);
                    let expected = if i == j { w2 } else { 0.0 };
                    let kind = if i == j { "same-index" } else { "disjoint-index" };
                    out.push(Sample { plane: format!("P1_{}^P2_{} {kind}", i + 1, j + 1), u, v, value, expected });
                }
            }
            vec![0.0; dim]
        }
    };
    let mut worst = 0.0f64;
    let mut rows = Vec::new();
    for s in out {
        let value = match s.value {
            Ok(k) => {
                worst = worst.max((k - s.expected).abs());
                num(k)
            }
            Err(CkError::DegeneratePlane { .. }) => Value::Null,
            Err(e) => return Err(e.into()),
        };
        rows.push(
            Obj::new()
                .set("plane", s.plane)
                .set("u", nums(&s.u))
                .set("v", nums(&s.v))
                .set("value", value)
                .set("expected", num(s.expected))
                .into(),
        );
    }
    let payload = Obj::new()
        .set("space", space.name())
        .set("chart", "beltrami")
        .set("point", nums(&p))
        .set("samples", Value::Array(rows))
        .set("max_deviation", num(worst));
    Ok(Report { command: "curvature", signature: sig.omegas().to_vec(), payload: payload.into() })
}
