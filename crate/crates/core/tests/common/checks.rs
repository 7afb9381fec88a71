//! Checks shared by the topical tests and the acceptance target.

use std::f64::consts::PI;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, TestRng, TestRunner};

use super::quad::{integrate, integrate_weakly_singular};
use subdiff_inverse::benchmark::BenchmarkCase;
use subdiff_inverse::collocation::{solve_vie, PiecewiseLinear};
use subdiff_inverse::mesh::{build_graded, CollocationGrid, Linear};
use subdiff_inverse::mlf::{ml, omega};
use subdiff_inverse::problem::{phi, phi_dual, psi, Family};
use subdiff_inverse::reconstruct::{coefficient_table, eval_u, HRule};

/// One randomized Ψ comparison.
#[derive(Debug, Clone, Copy)]
pub struct PsiDraw {
    pub alpha: f64,
    pub lambda: f64,
    pub t: f64,
    pub a: f64,
    pub b: f64,
    pub nu: f64,
    pub c: f64,
}

pub fn psi_strategy() -> impl Strategy<Value = PsiDraw> {
    let alpha = proptest::sample::select(vec![0.4, 0.5, 0.67, 1.0]);
    let lambda = proptest::sample::select(vec![4.0 * PI * PI, 16.0 * PI * PI]);
    (
        alpha,
        lambda,
        0.0..1.0f64,
        0.0..1.0f64,
        0.0..1.0f64,
        -5.0..5.0f64,
        -5.0..5.0f64,
    )
        .prop_map(|(alpha, lambda, p, q, r, nu, c)| {
            let (lo, hi) = if p < q { (p, q) } else { (q, p) };
            // t somewhere in [hi, 1], so sometimes far from the singularity
            let t = hi + r * (1.0 - hi);
            PsiDraw {
                alpha,
                lambda,
                t,
                a: lo,
                b: hi,
                nu,
                c,
            }
        })
}

/// `count` draws from a fixed seed.
pub fn psi_draws(count: usize) -> Vec<PsiDraw> {
    let mut runner = TestRunner::new_with_rng(
        Config::default(),
        TestRng::deterministic_rng(Default::default()),
    );
    let strat = psi_strategy();
    (0..count)
        .map(|_| strat.new_tree(&mut runner).expect("draw").current())
        .collect()
}

/// |Ψ|_a^b - λ∫_a^b (t-τ)^(α-1) E_{α,α}(-λ(t-τ)^α) L(τ) dτ| / (1 + |quadrature|).
pub fn psi_error(d: &PsiDraw) -> f64 {
    let line = Linear::new(d.nu, d.c);
    let closed = psi(d.alpha, d.t, d.b, d.lambda, line).unwrap()
        - psi(d.alpha, d.t, d.a, d.lambda, line).unwrap();
    let q = integrate_weakly_singular(
        |tau, dist| {
            d.lambda * ml(d.alpha, d.alpha, -d.lambda * dist.powf(d.alpha)).unwrap() * line.at(tau)
        },
        d.alpha,
        d.t,
        d.a,
        d.b,
        1e-12,
    );
    (closed - q).abs() / (1.0 + q.abs())
}

/// Every (family, index) with index <= 10; cosine starts at 1.
pub fn basis_labels() -> Vec<(Family, usize)> {
    let mut out: Vec<(Family, usize)> = (0..=10).map(|i| (Family::Sine, i)).collect();
    out.extend((1..=10).map(|i| (Family::Cosine, i)));
    out
}

/// max |<φ_ki, ψ_lj> - δ_kl δ_ij| over all label pairs.
pub fn biorthogonality_worst() -> f64 {
    let labels = basis_labels();
    let mut worst = 0.0f64;
    for &(fk, i) in &labels {
        for &(fl, j) in &labels {
            let v = integrate(
                |x| phi(fk, i, x).unwrap() * phi_dual(fl, j, x).unwrap(),
                0.0,
                1.0,
                1e-14,
            );
            let want = if fk == fl && i == j { 1.0 } else { 0.0 };
            worst = worst.max((v - want).abs());
        }
    }
    worst
}

/// max over `times` of |w - (w * Θ^α_1) - 1| with the convolution by quadrature.
pub fn benchmark_vie_worst(case: &BenchmarkCase, times: &[f64]) -> f64 {
    let al = case.alpha;
    let lam_sq = case.lambda1 * case.lambda1;
    let mut worst = 0.0f64;
    for &t in times {
        let conv = integrate_weakly_singular(
            |tau, d| case.exact_w(tau) * ml(al, al, -lam_sq * d.powf(al)).unwrap(),
            al,
            t,
            0.0,
            t,
            1e-13,
        );
        worst = worst.max((case.exact_w(t) - conv - 1.0).abs());
    }
    worst
}

/// max over `times` of |∫_0^1 u(x, t) dx - ω_{1+α}(t)|.
pub fn benchmark_mean_worst(case: &BenchmarkCase, times: &[f64]) -> f64 {
    let mut worst = 0.0f64;
    for &t in times {
        let mean = integrate(|x| case.exact_u(x, t).unwrap(), 0.0, 1.0, 1e-14);
        worst = worst.max((mean - omega(1.0 + case.alpha, t).unwrap()).abs());
    }
    worst
}

pub fn solve_benchmark(case: &BenchmarkCase, n: usize, delta: f64) -> PiecewiseLinear {
    let grid = CollocationGrid::gauss(build_graded(n, delta, 1.0).unwrap());
    solve_vie(&case.problem(), &grid).unwrap()
}

/// max |u - ũ| over t_1..t_N and 21 equispaced x.
pub fn field_error(case: &BenchmarkCase, n: usize, delta: f64, rule: HRule) -> f64 {
    let sol = solve_benchmark(case, n, delta);
    let table = coefficient_table(&case.problem(), &sol, rule).unwrap();
    let mut worst = 0.0f64;
    for (k, &t) in table.times.iter().enumerate() {
        for ix in 0..=20 {
            let x = ix as f64 / 20.0;
            let err = (eval_u(&table, x, k + 1).unwrap() - case.exact_u(x, t).unwrap()).abs();
            worst = worst.max(err);
        }
    }
    worst
}
