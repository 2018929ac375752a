//! Invariant suites behind `ckspaces verify`.

use ckspaces::rank_one::{act, origin};
use ckspaces::rank_two::{
    act_rank2, bivector_matrix, eliminate_inessential, invariant_form_rank2, is_nondegenerate_rank2,
    pluecker_residuals, sectional_curvature_rank2_origin,
};
use ckspaces::vector_rep::{commutator, invariant_form_rank1};
use ckspaces::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::report::{num, Obj};

/// Words drawn per signature in the randomized suites.
const WORDS: u64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Brackets,
    Killing,
    Isometry,
    Pluecker,
    Curvature,
    All,
}

pub struct Check {
    name: &'static str,
    cases: usize,
    max_residual: f64,
    threshold: f64,
    skipped: bool,
}

impl Check {
    fn new(name: &'static str, threshold: f64) -> Self {
        Self { name, cases: 0, max_residual: 0.0, threshold, skipped: false }
    }

    fn record(&mut self, residual: f64) {
        self.cases += 1;
        // NaN counts as a failure
        self.max_residual = if residual.is_nan() { f64::INFINITY } else { self.max_residual.max(residual) };
    }

    fn skip(mut self) -> Self {
        self.skipped = true;
        self
    }

    pub fn pass(&self) -> bool {
        self.max_residual <= self.threshold
    }

    pub fn to_value(&self) -> Value {
        Obj::new()
            .set("name", self.name)
            .set("cases", self.cases)
            .set("max_residual", num(self.max_residual))
            .set("threshold", num(self.threshold))
            .set("pass", self.pass())
            .set("skipped", self.skipped)
            .into()
    }
}

fn brackets(n: usize) -> Vec<Check> {
    let mut rep = Check::new("matrix commutators equal structure constants", 0.0);
    let mut jacobi = Check::new("Jacobi identity", 0.0);
    let all = GeneratorIndex::all(n);
    for s in OmegaSignature::canonical_family(n) {
        let gens: Vec<_> = all.iter().map(|&g| vector_generator(&s, g)).collect();
        for (i, &x) in all.iter().enumerate() {
            for (j, &y) in all.iter().enumerate() {
                let m = commutator(&gens[i], &gens[j]);
                let coeffs = bracket(&s, x, y).coefficients(n);
                let read: Vec<f64> = all.iter().map(|g| m[(g.b, g.a)]).collect();
                rep.record(coeffs.iter().zip(&read).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
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
                    jacobi.record(total.iter().fold(0.0, |m, t| m.max(t.abs())));
                }
            }
        }
    }
    vec![rep, jacobi]
}

fn killing(n: usize) -> Vec<Check> {
    let mut closed = Check::new("trace form equals closed form", 0.0);
    let mut null = Check::new("null space of a single contraction is p^(a)", 0.0);
    for s in OmegaSignature::canonical_family(n) {
        let k = killing_matrix(&s);
        closed.record((&k - killing_closed_form(&s)).amax());
        let zeros: Vec<usize> = (1..=n).filter(|&a| s.omegas()[a - 1] == 0.0).collect();
        if n >= 2 && zeros.len() == 1 {
            let split = cartan_split(&s, zeros[0]).expect("index in range");
            let wrong = GeneratorIndex::all(n)
                .into_iter()
                .enumerate()
                .filter(|&(i, g)| (k[(i, i)] == 0.0) != split.in_p(g))
                .count();
            null.record(wrong as f64);
        }
    }
    if null.cases == 0 {
        null = null.skip();
    }
    vec![closed, null]
}

fn isometry(n: usize, seed: u64, tol: &Tolerances) -> Vec<Check> {
    let mut form1 = Check::new("words preserve the rank-one form", 1e-9);
    let mut sphere = Check::new("words preserve the rank-one sphere", 1e-10);
    let mut form2 = Check::new("words preserve the rank-two form", 1e-9);
    for s in OmegaSignature::canonical_family(n) {
        for k in 0..WORDS {
            let g = random_group_element(&s, seed.wrapping_add(k), 1 + (k as usize % 12));
            form1.record(g.invariance_residual(&invariant_form_rank1(&s)));
            sphere.record(act(&g, &origin(n), tol).map_or(f64::INFINITY, |p| p.sphere_residual(&s).abs()));
            if n >= 3 {
                let m = bivector_matrix(&g);
                let l = invariant_form_rank2(&s).expect("n >= 3");
                form2.record((m.transpose() * &l * &m - &l).amax());
            }
        }
    }
    if n < 3 {
        form2 = form2.skip();
    }
    vec![form1, sphere, form2]
}

fn pluecker(n: usize, seed: u64) -> Vec<Check> {
    let mut rel = Check::new("Pluecker relations preserved", 1e-9);
    let mut sphere = Check::new("rank-two sphere preserved", 1e-10);
    if n < 3 {
        return vec![rel.skip(), sphere.skip()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in OmegaSignature::canonical_family(n) {
        for k in 0..WORDS {
            let x0 = (0..n - 1).map(|_| rng.random_range(-0.3..0.3)).collect();
            let x1 = (0..n - 1).map(|_| rng.random_range(-0.3..0.3)).collect();
            let Ok(x) = eliminate_inessential(&s, &RankTwoEssentials { x0, x1 }) else { continue };
            let g = random_group_element(&s, seed.wrapping_add(k), 1 + (k as usize % 12));
            let y = act_rank2(&g, &x).expect("dimensions agree");
            let r = pluecker_residuals(&y).expect("n >= 3");
            rel.record(r.iter().fold(0.0, |m, v| m.max(v.abs())));
            sphere.record(y.sphere_residual(&s).expect("n >= 3").abs());
        }
    }
    vec![rel, sphere]
}

fn curvature(n: usize) -> Vec<Check> {
    let opts = CurvatureOptions::default();
    let mut one = Check::new("rank-one curvature equals w1", 1e-4);
    let mut two = Check::new("rank-two origin curvature follows w2", 1e-4);
    let e = |dim: usize, i: usize| {
        let mut v = vec![0.0; dim];
        v[i] = 1.0;
        v
    };
    for s in OmegaSignature::canonical_family(n) {
        let w = s.omegas();
        if n >= 2 && rank_one::is_nondegenerate_rank1(&s) {
            let eta = BeltramiPoint { coords: vec![0.0; n] };
            let k = rank_one::sectional_curvature_rank1(&s, &eta, &e(n, 0), &e(n, n - 1), opts);
            one.record(k.map_or(f64::INFINITY, |k| (k - w[0]).abs()));
        }
        if n >= 3 && is_nondegenerate_rank2(&s) {
            let m = n - 1;
            for j in 0..m {
                let expected = if j == 0 { w[1] } else { 0.0 };
                let k = sectional_curvature_rank2_origin(&s, &e(2 * m, 0), &e(2 * m, m + j), opts);
                two.record(k.map_or(f64::INFINITY, |k| (k - expected).abs()));
            }
        }
    }
    if one.cases == 0 {
        one = one.skip();
    }
    if two.cases == 0 {
        two = two.skip();
    }
    vec![one, two]
}

pub fn run(suite: Suite, n: usize, seed: u64, tol: &Tolerances) -> Vec<(&'static str, Vec<Check>)> {
    let pick = |s: Suite| suite == s || suite == Suite::All;
    let mut out = Vec::new();
    if pick(Suite::Brackets) {
        out.push(("brackets", brackets(n)));
    }
    if pick(Suite::Killing) {
        out.push(("killing", killing(n)));
    }
    if pick(Suite::Isometry) {
        out.push(("isometry", isometry(n, seed, tol)));
    }
    if pick(Suite::Pluecker) {
        out.push(("pluecker", pluecker(n, seed)));
    }
    if pick(Suite::Curvature) {
        out.push(("curvature", curvature(n)));
    }
    out
}
