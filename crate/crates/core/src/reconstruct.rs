//! Field reconstruction from the collocation source.
//!
//! Each Fourier coefficient of u is a convolution of w h_ki with a
//! Mittag-Leffler kernel. On every interval the product w̃ h_ki is replaced
//! by a linear polynomial (see [`HRule`]), after which each interval
//! contributes a closed-form antiderivative difference.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::collocation::PiecewiseLinear;
use crate::error::{Error, Result};
use crate::mesh::{CollocationGrid, Linear};
use crate::mlf::{eval_unchecked, omega, omega_at, theta};
use crate::problem::{phi, Family, FourierMode, ProblemSpec, PsiKernel};

/// Approximate coefficients at the nodes t_1..t_N.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    pub times: Vec<f64>,
    pub u10: Vec<f64>,
    pub u1: BTreeMap<usize, Vec<f64>>,
    pub u2: BTreeMap<usize, Vec<f64>>,
}

/// How h_ki enters the product w̃ h_ki on an interval I_m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HRule {
    /// Interpolate the product at the collocation points,
    /// Σ_s w̃(t_{m,s}) h(t_{m,s}) L_{m,s}. Second order for smooth h.
    #[default]
    Collocation,
    /// Freeze h at the midpoint of I_m, as the source solver does. Only
    /// first order plus alpha near the kernel singularity when h varies.
    Midpoint,
}

impl HRule {
    fn weight(self, grid: &CollocationGrid, h: &dyn Fn(f64) -> f64, m: usize, s: usize) -> f64 {
        match self {
            HRule::Collocation => h(grid.point(m, s)),
            HRule::Midpoint => h(grid.mesh().midpoint(m)),
        }
    }
}

fn mode(spec: &ProblemSpec, family: Family, i: usize) -> Result<&FourierMode> {
    spec.mode(family, i)
        .ok_or_else(|| Error::domain(format!("no {family:?} mode with index {i}")))
}

fn check_node(grid: &CollocationGrid, n: usize) -> Result<f64> {
    if n == 0 || n > grid.intervals() {
        return Err(Error::domain(format!(
            "node index {n} not in 1..={}",
            grid.intervals()
        )));
    }
    Ok(grid.mesh().node(n))
}

/// Σ_m Σ_s h_{m,s} w(t_{m,s}) Ψ(t_n, ·, λ², L_{m,s})|_{t_{m-1}}^{t_m} / λ²,
/// i.e. (w h) * Θ^alpha at t_n.
fn conv_theta(
    spec: &ProblemSpec,
    sol: &PiecewiseLinear,
    rule: HRule,
    h: &dyn Fn(f64) -> f64,
    lambda: f64,
    n: usize,
) -> f64 {
    let grid = sol.grid();
    let mesh = grid.mesh();
    let t = mesh.node(n);
    let lam_sq = lambda * lambda;
    let kernels: Vec<PsiKernel> = (0..=n)
        .map(|k| PsiKernel::new(spec.alpha(), lam_sq, t - mesh.node(k)))
        .collect();
    let mut acc = 0.0;
    for m in 1..=n {
        let (lo, hi) = (mesh.node(m - 1), mesh.node(m));
        for s in 1..=2 {
            let line = grid.basis(m, s);
            let diff = kernels[m].apply(line, hi) - kernels[m - 1].apply(line, lo);
            acc += rule.weight(grid, h, m, s) * sol.value(m, s) * diff;
        }
    }
    acc / lam_sq
}

/// ũ_1i(t_n) = ((w̃ h_1i) * Θ^alpha_i)(t_n) + g_1i Θ^gamma_i(t_n).
pub fn coeff_u1(
    spec: &ProblemSpec,
    sol: &PiecewiseLinear,
    rule: HRule,
    i: usize,
    n: usize,
) -> Result<f64> {
    let t = check_node(sol.grid(), n)?;
    let md = mode(spec, Family::Sine, i)?;
    let lam = md.lambda();
    let conv = conv_theta(spec, sol, rule, &|s| md.h(s), lam, n);
    Ok(conv + md.g() * theta(spec.alpha(), spec.gamma(), lam * lam, t)?)
}

/// ũ_10(t_n) = ((w̃ h_10) * ω_alpha)(t_n) + g_10 ω_gamma(t_n).
pub fn coeff_u10(spec: &ProblemSpec, sol: &PiecewiseLinear, rule: HRule, n: usize) -> Result<f64> {
    let t = check_node(sol.grid(), n)?;
    let grid = sol.grid();
    let mesh = grid.mesh();
    let al = spec.alpha();
    // ∫_lo^hi L(τ) ω_alpha(t-τ) dτ = F(lo) - F(hi), F = L ω_{alpha+1}(t-·) + ν ω_{alpha+2}(t-·)
    let anti = |line: Linear, tau: f64| {
        let d = t - tau;
        line.at(tau) * omega_at(al + 1.0, d) + line.slope() * omega_at(al + 2.0, d)
    };
    let mut acc = 0.0;
    for m in 1..=n {
        let (lo, hi) = (mesh.node(m - 1), mesh.node(m));
        for s in 1..=2 {
            let line = grid.basis(m, s);
            let h = rule.weight(grid, &|t| spec.h10(t), m, s);
            acc += h * sol.value(m, s) * (anti(line, lo) - anti(line, hi));
        }
    }
    if spec.g10() != 0.0 {
        acc += spec.g10() * omega(spec.gamma(), t)?;
    }
    Ok(acc)
}

/// ũ_2i(t_n): the mirror of [`coeff_u1`] with (h_2i, g_2i), minus the
/// coupling 2λ_i [((w̃ h_1i) * τ^(2alpha-1) E²_{alpha,2alpha}(-λ_i² τ^alpha))(t_n) +
/// g_1i t_n^(alpha+gamma-1) E²_{alpha,alpha+gamma}(-λ_i² t_n^alpha)].
/// A missing partner mode counts as zero.
pub fn coeff_u2(
    spec: &ProblemSpec,
    sol: &PiecewiseLinear,
    rule: HRule,
    i: usize,
    n: usize,
) -> Result<f64> {
    let t = check_node(sol.grid(), n)?;
    let md = mode(spec, Family::Cosine, i)?;
    let lam = md.lambda();
    let lam_sq = lam * lam;
    let al = spec.alpha();
    let mut acc = conv_theta(spec, sol, rule, &|s| md.h(s), lam, n);
    acc += md.g() * theta(al, spec.gamma(), lam_sq, t)?;

    if let Some(partner) = spec.mode(Family::Sine, i) {
        let grid = sol.grid();
        let mesh = grid.mesh();
        // antiderivative in τ of L(τ) d^(2alpha-1) E²_{alpha,2alpha}(-λ² d^alpha), d = t - τ
        let anti =
            |line: Linear, tau: f64, p1: f64, p2: f64| -line.at(tau) * p1 - line.slope() * p2;
        let pieces: Vec<(f64, f64)> = (0..=n)
            .map(|k| {
                let d = t - mesh.node(k);
                if d == 0.0 {
                    return (0.0, 0.0);
                }
                let z = -lam_sq * d.powf(al);
                let d2a = d.powf(2.0 * al);
                (
                    d2a * eval_unchecked(al, 2.0 * al + 1.0, 2, z),
                    d2a * d * eval_unchecked(al, 2.0 * al + 2.0, 2, z),
                )
            })
            .collect();
        let mut coupling = 0.0;
        for m in 1..=n {
            let (lo, hi) = (mesh.node(m - 1), mesh.node(m));
            for s in 1..=2 {
                let line = grid.basis(m, s);
                let upper = anti(line, hi, pieces[m].0, pieces[m].1);
                let lower = anti(line, lo, pieces[m - 1].0, pieces[m - 1].1);
                let h = rule.weight(grid, &|t| partner.h(t), m, s);
                coupling += h * sol.value(m, s) * (upper - lower);
            }
        }
        if partner.g() != 0.0 {
            let z = -lam_sq * t.powf(al);
            coupling += partner.g()
                * t.powf(al + spec.gamma() - 1.0)
                * eval_unchecked(al, al + spec.gamma(), 2, z);
        }
        acc -= 2.0 * lam * coupling;
    }
    Ok(acc)
}

/// All coefficients at all nodes, computed in parallel.
pub fn coefficient_table(
    spec: &ProblemSpec,
    sol: &PiecewiseLinear,
    rule: HRule,
) -> Result<CoefficientTable> {
    let n_max = sol.grid().intervals();
    let nodes: Vec<usize> = (1..=n_max).collect();
    let column = |f: &(dyn Fn(usize) -> Result<f64> + Sync)| -> Result<Vec<f64>> {
        nodes.par_iter().map(|&n| f(n)).collect()
    };
    let u10 = column(&|n| coeff_u10(spec, sol, rule, n))?;
    let mut u1 = BTreeMap::new();
    let mut u2 = BTreeMap::new();
    for md in spec.modes() {
        let i = md.index();
        match md.family() {
            Family::Sine => {
                u1.insert(i, column(&|n| coeff_u1(spec, sol, rule, i, n))?);
            }
            Family::Cosine => {
                u2.insert(i, column(&|n| coeff_u2(spec, sol, rule, i, n))?);
            }
        }
    }
    Ok(CoefficientTable {
        times: sol.grid().mesh().nodes()[1..].to_vec(),
        u10,
        u1,
        u2,
    })
}

/// ũ(x, t_n) = 2ũ_10 + Σ_i 4(1-x) sin(λ_i x) ũ_1i + Σ_i 4 cos(λ_i x) ũ_2i.
pub fn eval_u(table: &CoefficientTable, x: f64, n: usize) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("x = {x} not in [0, 1]")));
    }
    if n == 0 || n > table.times.len() {
        return Err(Error::domain(format!(
            "node index {n} not in 1..={}",
            table.times.len()
        )));
    }
    let mut acc = phi(Family::Sine, 0, x)? * table.u10[n - 1];
    for (&i, col) in &table.u1 {
        acc += phi(Family::Sine, i, x)? * col[n - 1];
    }
    for (&i, col) in &table.u2 {
        acc += phi(Family::Cosine, i, x)? * col[n - 1];
    }
    Ok(acc)
}
