//! Acceptance run: one line per criterion, non-zero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use ckspaces::rank_one::{
    act, act_beltrami, beltrami_metric, origin, parallel_to_weierstrass, sectional_curvature_rank1,
    subsidiary_metric_rank1,
};
use ckspaces::rank_two::*;
use ckspaces::vector_rep::{commutator, invariant_form_rank1};
use ckspaces::*;
use common::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn max_abs<'a>(xs: impl IntoIterator<Item = &'a f64>) -> f64 {
    xs.into_iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn structure_constants() -> Outcome {
    let start = Instant::now();
    let (mut pairs, mut triples, mut bad) = (0usize, 0usize, 0usize);
    for n in 2..=4 {
        let all = GeneratorIndex::all(n);
        for s in OmegaSignature::canonical_family(n) {
            let gens: Vec<_> = all.iter().map(|&g| vector_generator(&s, g)).collect();
            for (i, &x) in all.iter().enumerate() {
                for (j, &y) in all.iter().enumerate() {
                    let from_matrices = coefficients_of(&commutator(&gens[i], &gens[j]), n);
                    let from_rules = bracket_oracle(&s, x, y);
                    let from_library = bracket(&s, x, y).coefficients(n);
                    bad += usize::from(from_matrices != from_rules || from_library != from_rules);
                    pairs += 1;
                    for &z in &all {
                        let mut total = vec![0.0; all.len()];
                        for b in [
                            bracket(&s, y, z).bracket_with(&s, x),
                            bracket(&s, z, x).bracket_with(&s, y),
                            bracket(&s, x, y).bracket_with(&s, z),
                        ] {
                            for (t, c) in total.iter_mut().zip(b.coefficients(n)) {
                                *t += c;
                            }
                        }
                        bad += usize::from(total.iter().any(|t| *t != 0.0));
                        triples += 1;
                    }
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        bad == 0 && secs < 10.0,
        format!("{pairs} brackets and {triples} Jacobi triples exact, {bad} mismatches, {secs:.2} s"),
    )
}

fn closed_form_exponential() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1001);
    let mut worst: f64 = 0.0;
    for n in 1..=4 {
        let all = GeneratorIndex::all(n);
        for _ in 0..100 {
            let s = random_signature(&mut r, n);
            let g = all[r.random_range(0..all.len())];
            let x = r.random_range(-2.0..=2.0);
            let d = one_param_subgroup(&s, g, x).matrix - series_exp(&(vector_generator(&s, g) * x));
            worst = worst.max(d.amax());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(worst <= 1e-10 && secs < 10.0, format!("400 samples, max deviation {worst:.3e}, {secs:.2} s"))
}

/// `Tr(ad X ad Y)` with `ad` assembled from the bracket rules.
fn killing_oracle(s: &OmegaSignature) -> DenseMatrix {
    let n = s.n();
    let all = GeneratorIndex::all(n);
    let ad = |x: GeneratorIndex| {
        let mut m = DenseMatrix::zeros(all.len(), all.len());
        for (c, &y) in all.iter().enumerate() {
            for (row, v) in bracket_oracle(s, x, y).into_iter().enumerate() {
                m[(row, c)] = v;
            }
        }
        m
    };
    let ads: Vec<_> = all.iter().map(|&g| ad(g)).collect();
    DenseMatrix::from_fn(all.len(), all.len(), |i, j| (&ads[i] * &ads[j]).trace())
}

fn killing_cartan() -> Outcome {
    let (mut checked, mut bad, mut nulls) = (0, 0, 0);
    for n in 1..=4 {
        let all = GeneratorIndex::all(n);
        for s in OmegaSignature::canonical_family(n) {
            let closed = DenseMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
                all.len(),
                all.iter().map(|g| -2.0 * (n as f64 - 1.0) * omega_ab(&s, g.a, g.b)),
            ));
            let k = killing_matrix(&s);
            bad += usize::from(k != closed || killing_oracle(&s) != closed);
            checked += 1;
            let zeros: Vec<usize> = (1..=n).filter(|&a| s.omegas()[a - 1] == 0.0).collect();
            if n >= 2 && zeros.len() == 1 {
                let a = zeros[0];
                let null: Vec<bool> = (0..all.len()).map(|i| k[(i, i)] == 0.0).collect();
                let p: Vec<bool> = all.iter().map(|g| g.a < a && a <= g.b).collect();
                let offdiag = (0..all.len()).all(|i| (0..all.len()).all(|j| i == j || k[(i, j)] == 0.0));
                bad += usize::from(null != p || !offdiag);
                nulls += 1;
            }
        }
    }
    outcome(bad == 0, format!("{checked} signatures exact, {nulls} single-zero null spaces equal p^(a)"))
}

fn isometry_invariance() -> Outcome {
    let tol = Tolerances::default();
    let mut r = rng(1004);
    let (mut form1, mut form2, mut plu, mut sph1, mut sph2): (f64, f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0, 0.0);
    let mut lines = 0;
    for seed in 0..50u64 {
        let len = 1 + (seed as usize % 12);
        for n in 1..=4 {
            let s = random_signature(&mut r, n);
            let g = random_group_element(&s, seed, len);
            form1 = form1.max(g.invariance_residual(&invariant_form_rank1(&s)));
            sph1 = sph1.max(act(&g, &origin(n), &tol).unwrap().sphere_residual(&s).abs());
            if n < 3 {
                continue;
            }
            let m = bivector_matrix(&g);
            let l = invariant_form_rank2(&s).unwrap();
            form2 = form2.max((m.transpose() * &l * &m - &l).amax());
            let e = RankTwoEssentials { x0: uniform_vec(&mut r, n - 1, 0.3), x1: uniform_vec(&mut r, n - 1, 0.3) };
            if let Ok(x) = eliminate_inessential(&s, &e) {
                let y = act_rank2(&g, &x).unwrap();
                plu = plu.max(max_abs(&pluecker_residuals(&y).unwrap()));
                sph2 = sph2.max(y.sphere_residual(&s).unwrap().abs());
                lines += 1;
            }
        }
    }
    let pass = form1 <= 1e-9 && form2 <= 1e-9 && plu <= 1e-9 && sph1 <= 1e-10 && sph2 <= 1e-10 && lines >= 50;
    outcome(
        pass,
        format!(
            "forms {form1:.2e}/{form2:.2e}, pluecker {plu:.2e}, sphere {sph1:.2e}/{sph2:.2e} over {lines} lines"
        ),
    )
}

fn bivector_oracle() -> Outcome {
    let mut r = rng(1005);
    let (mut sigs, mut bad) = (0, 0);
    for n in 3..=4 {
        for _ in 0..25 {
            let s = integer_signature(&mut r, n);
            sigs += 1;
            let gens: Vec<_> = RankTwoGenerator::all(n)
                .into_iter()
                .map(|g| {
                    let (sign, idx) = g.to_omega();
                    let m = bivector_generator(&s, g).unwrap();
                    bad += usize::from(m != antisymmetrized_square(&(vector_generator(&s, idx) * sign)));
                    (g, m)
                })
                .collect();
            let get = |g: RankTwoGenerator| &gens.iter().find(|(h, _)| *h == g).unwrap().1;
            let w = s.omegas();
            let kk = |i: usize, j: usize| -> f64 { w[i + 1..j + 1].iter().product() };
            let mut rel = |x, y, rhs: &[(f64, RankTwoGenerator)]| {
                let mut m = commutator(get(x), get(y));
                for &(c, z) in rhs {
                    m -= get(z) * c;
                }
                bad += usize::from(m.amax() != 0.0);
            };
            use RankTwoGenerator::{J, J12, P1, P2};
            for i in 1..n {
                rel(J12, P1(i), &[(1.0, P2(i))]);
                rel(J12, P2(i), &[(-w[0], P1(i))]);
                rel(P1(i), P2(i), &[(w[1] * kk(1, i), J12)]);
                for j in i + 1..n {
                    for (a, b) in [(P1(i), P1(j)), (P2(i), P2(j))] {
                        rel(J(i, j), a, &[(1.0, b)]);
                        rel(J(i, j), b, &[(-kk(i, j), a)]);
                    }
                    rel(P1(i), P1(j), &[(w[1] * kk(1, i), J(i, j))]);
                    rel(P2(i), P2(j), &[(w[1] * kk(1, i) * w[0], J(i, j))]);
                    for k in j + 1..n {
                        rel(J(i, j), J(i, k), &[(kk(i, j), J(j, k))]);
                        rel(J(i, j), J(j, k), &[(-1.0, J(i, k))]);
                        rel(J(i, k), J(j, k), &[(kk(j, k), J(i, j))]);
                    }
                }
            }
        }
    }
    outcome(bad == 0, format!("{sigs} integer signatures, generators and commutation table exact, {bad} mismatches"))
}

fn table_patterns() -> Vec<OmegaSignature> {
    let mut out = Vec::new();
    for w1 in [1.0, 0.0, -1.0] {
        for w2 in [1.0, 0.0, -1.0] {
            out.push(sig(&[w1, w2, 1.0, 1.0]));
        }
    }
    out
}

/// Collects `want` pullback defects, drawing fresh short words and points
/// whenever the image leaves the well-conditioned part of the chart.
fn invariance_samples<P, F, M>(want: usize, mut sample: P, f: F, metric: M) -> (usize, f64)
where
    P: FnMut(u64) -> (GroupElement, Vec<f64>),
    F: Fn(&GroupElement, &[f64]) -> Option<Vec<f64>>,
    M: Fn(&[f64]) -> Option<DenseMatrix>,
{
    let (mut got, mut worst) = (0, 0.0f64);
    for seed in 0..10 * want as u64 {
        if got == want {
            break;
        }
        let (g, p) = sample(seed);
        if let Some(d) = pullback_defect(|x| f(&g, x), &metric, &p, 1e-3) {
            worst = worst.max(d);
            got += 1;
        }
    }
    (got, worst)
}

fn metric_invariance() -> Outcome {
    let tol = Tolerances::default();
    let mut r = rng(1006);
    let (mut worst, mut short) = (0.0f64, 0);
    for s in table_patterns() {
        let rr = &mut r;
        let (got1, d1) = invariance_samples(
            20,
            |seed| (random_group_element(&s, seed, 3), uniform_vec(rr, 4, 0.3)),
            |g, x| {
                let y = act_beltrami(g, &BeltramiPoint { coords: x.to_vec() }, &tol).ok()?;
                (max_abs(&y.coords) < 2.0).then_some(y.coords)
            },
            |x| beltrami_metric(&s, &BeltramiPoint { coords: x.to_vec() }, &tol).ok().map(|m| m.matrix),
        );
        let rr = &mut r;
        let (got2, d2) = invariance_samples(
            20,
            |seed| (random_group_element(&s, seed, 3), uniform_vec(rr, 6, 0.3)),
            |g, x| {
                let y = act_rank2_beltrami(g, &RankTwoBeltrami::from_flat(x), &tol).ok()?.flatten();
                (max_abs(&y) < 2.0).then_some(y)
            },
            |x| rank2_metric(&s, &RankTwoBeltrami::from_flat(x), &tol).ok().map(|m| m.matrix),
        );
        short += usize::from(got1 < 20) + usize::from(got2 < 20);
        worst = worst.max(d1).max(d2);
    }
    outcome(
        worst <= 1e-8 && short == 0,
        format!("9 patterns x 20 elements x 2 ranks, max defect {worst:.3e}, {short} patterns short of samples"),
    )
}

fn random_plane(r: &mut ChaCha8Rng, g: &DenseMatrix) -> (Vec<f64>, Vec<f64>) {
    let dim = g.nrows();
    loop {
        let (u, v) = (uniform_vec(r, dim, 1.0), uniform_vec(r, dim, 1.0));
        let (uu, vv) = (DenseMatrix::from_column_slice(dim, 1, &u), DenseMatrix::from_column_slice(dim, 1, &v));
        let ip = |a: &DenseMatrix, b: &DenseMatrix| (a.transpose() * g * b)[(0, 0)];
        let gram = ip(&uu, &uu) * ip(&vv, &vv) - ip(&uu, &vv).powi(2);
        if gram.abs() > 0.1 {
            return (u, v);
        }
    }
}

fn curvature() -> Outcome {
    let tol = Tolerances::default();
    let opts = CurvatureOptions::default();
    let mut r = rng(1007);
    let (mut worst1, mut n1) = (0.0f64, 0);
    for s in table_patterns().into_iter().filter(|s| s.omegas()[1] != 0.0) {
        for _ in 0..5 {
            let eta = BeltramiPoint { coords: uniform_vec(&mut r, 4, 0.3) };
            let g = beltrami_metric(&s, &eta, &tol).unwrap().matrix;
            for _ in 0..3 {
                let (u, v) = random_plane(&mut r, &g);
                let k = sectional_curvature_rank1(&s, &eta, &u, &v, opts).map_or(f64::INFINITY, |k| k);
                worst1 = worst1.max((k - s.omegas()[0]).abs());
                n1 += 1;
            }
        }
    }
    let (mut worst2, mut n2) = (0.0f64, 0);
    let e = |i: usize| {
        let mut v = vec![0.0; 6];
        v[i] = 1.0;
        v
    };
    for s in table_patterns().into_iter().filter(is_nondegenerate_rank2) {
        let w2 = s.omegas()[1];
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { w2 } else { 0.0 };
                let k = sectional_curvature_rank2_origin(&s, &e(i), &e(3 + j), opts).map_or(f64::INFINITY, |k| k);
                worst2 = worst2.max((k - expected).abs());
                n2 += 1;
            }
        }
    }
    outcome(
        worst1 <= 1e-4 && worst2 <= 1e-4,
        format!("rank one {n1} samples max error {worst1:.2e}; rank two {n2} origin planes max error {worst2:.2e}"),
    )
}

fn foliation_degeneracy() -> Outcome {
    let tol = Tolerances::default();
    let mut r = rng(1008);
    let mut ok = true;
    for w1 in [1.0, 0.0, -1.0] {
        let s = sig(&[w1, 0.0, 1.0, 1.0]);
        for _ in 0..5 {
            let eta = BeltramiPoint { coords: uniform_vec(&mut r, 4, 0.5) };
            let g = beltrami_metric(&s, &eta, &tol).unwrap().matrix;
            ok &= g.view((1, 1), (3, 3)).iter().all(|x| *x == 0.0);
        }
        ok &= subsidiary_metric_rank1(&s, 2).unwrap().matrix == DenseMatrix::identity(3, 3);
    }
    let mut worst = 0.0f64;
    for w2 in [1.0, 0.0, -1.0] {
        let s = sig(&[0.0, w2, 1.0, 1.0]);
        let velocity = sig(&[w2, 1.0, 1.0]);
        for _ in 0..10 {
            let pt = RankTwoBeltrami { eta: uniform_vec(&mut r, 3, 0.5), xi: uniform_vec(&mut r, 3, 3.0) };
            let g = rank2_metric(&s, &pt, &tol).unwrap().matrix;
            let v = beltrami_metric(&velocity, &BeltramiPoint { coords: pt.eta.clone() }, &tol).unwrap().matrix;
            worst = worst.max((g.view((0, 0), (3, 3)) - v).amax());
            ok &= g.view((3, 0), (3, 6)).iter().all(|x| *x == 0.0);
        }
    }
    outcome(
        ok && worst <= 1e-12,
        format!("spacetime fiber blocks zero and spatial metric diag(1,1,1): {ok}; velocity-space deviation {worst:.2e}"),
    )
}

fn catalog() -> Outcome {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.tsv");
    let text = std::fs::read_to_string(path).expect("catalog file is readable");
    let (mut cells, mut bad) = (0, Vec::new());
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let f: Vec<&str> = line.split('\t').collect();
        let w = |c: &str| match c {
            "+" => 1.0,
            "0" => 0.0,
            _ => -1.0,
        };
        let rec = classify_group(&sig(&[w(f[1]), w(f[2]), 1.0, 1.0]));
        let entry = if f[0] == "I" { rec.rank_one } else { rec.rank_two };
        let got = entry.map(|e| {
            [
                e.name.clone(),
                e.coset.clone(),
                e.curvature.clone(),
                e.foliation_label().to_string(),
                e.base.clone().unwrap_or_else(|| "-".into()),
                e.fiber.clone().unwrap_or_else(|| "-".into()),
            ]
        });
        let want = [f[3], f[5], f[6], f[7], f[8], f[9]].map(String::from);
        if got.as_ref() != Some(&want) {
            bad.push(f[3].to_string());
        }
        cells += 1;
    }
    outcome(cells == 18 && bad.is_empty(), format!("{cells} cells compared, mismatches {bad:?}"))
}

/// `J^T L J` with `J` from a fourth-order central stencil.
fn pulled_back(f: impl Fn(&[f64]) -> Option<Vec<f64>>, form: &DenseMatrix, p: &[f64]) -> Option<DenseMatrix> {
    let h = 1e-3;
    let dim = p.len();
    let rows = f(p)?.len();
    let mut j = DenseMatrix::zeros(rows, dim);
    for c in 0..dim {
        let at = |t: f64| {
            let mut x = p.to_vec();
            x[c] += t;
            f(&x)
        };
        let (p2, p1, m1, m2) = (at(2.0 * h)?, at(h)?, at(-h)?, at(-2.0 * h)?);
        for i in 0..rows {
            j[(i, c)] = (-p2[i] + 8.0 * p1[i] - 8.0 * m1[i] + m2[i]) / (12.0 * h);
        }
    }
    Some(j.transpose() * form * j)
}

fn pullback_consistency() -> Outcome {
    let tol = Tolerances::default();
    let mut r = rng(1010);
    let (mut worst, mut points, mut sigs) = (0.0f64, 0, 0);
    for s in OmegaSignature::canonical_family(4) {
        let k1 = s.omegas()[0];
        if rank_one::is_nondegenerate_rank1(&s) {
            sigs += 1;
            let form = invariant_form_rank1(&s);
            for _ in 0..20 {
                let a = uniform_vec(&mut r, 4, 0.8);
                let emb = |x: &[f64]| parallel_to_weierstrass(&s, &ParallelCoords { coords: x.to_vec() }).ok().map(|p| p.coords);
                let chart = rank_one::parallel_metric(&s, &ParallelCoords { coords: a.clone() }).unwrap().matrix;
                let amb = pulled_back(emb, &form, &a).unwrap();
                worst = worst.max((amb - chart * k1).amax());
                points += 1;
            }
        }
        if is_nondegenerate_rank2(&s) {
            sigs += 1;
            let form = invariant_form_rank2(&s).unwrap();
            let k = s.omegas()[1];
            let mut got = 0;
            while got < 20 {
                let p = uniform_vec(&mut r, 6, 0.3);
                let emb = |x: &[f64]| rank2_beltrami_to_pluecker(&s, &RankTwoBeltrami::from_flat(x), &tol).ok().map(|y| y.coords);
                let (Some(amb), Ok(chart)) =
                    (pulled_back(emb, &form, &p), rank2_metric(&s, &RankTwoBeltrami::from_flat(&p), &tol))
                else {
                    continue;
                };
                worst = worst.max((amb - chart.matrix * k).amax());
                got += 1;
                points += 1;
            }
        }
    }
    outcome(worst <= 1e-6, format!("{sigs} signature/rank cases, {points} points, max deviation {worst:.3e}"))
}

fn grassmann_invariant_n3() -> Outcome {
    let mut r = rng(1011);
    let mut worst = 0.0f64;
    for seed in 0..50u64 {
        let s = random_signature(&mut r, 3);
        let x = uniform_vec(&mut r, 6, 1.0);
        // x01 x23 - x02 x13 + x03 x12 in lexicographic order
        let inv = |c: &[f64]| c[0] * c[5] - c[1] * c[4] + c[2] * c[3];
        let g = random_group_element(&s, seed, 1 + (seed as usize % 12));
        let y = bivector_matrix(&g) * DenseMatrix::from_column_slice(6, 1, &x);
        worst = worst.max((inv(y.as_slice()) - inv(&x)).abs());
    }
    outcome(worst <= 1e-9, format!("50 words, max drift {worst:.3e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("structure constants", structure_constants),
        ("closed-form exponential", closed_form_exponential),
        ("Killing-Cartan form", killing_cartan),
        ("isometry invariance", isometry_invariance),
        ("bivector representation", bivector_oracle),
        ("metric invariance", metric_invariance),
        ("curvature", curvature),
        ("foliation and degeneracy", foliation_degeneracy),
        ("catalog", catalog),
        ("ambient pullback", pullback_consistency),
        ("Grassmann invariant", grassmann_invariant_n3),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} [{tag}] {name}: {}", i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
