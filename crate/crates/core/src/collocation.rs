//! Discontinuous piecewise-linear collocation for the source equation
//!
//!   H(t) w(t) - ∫_0^t E(t, τ) w(τ) dτ = G(t),
//!
//! marching one 2x2 system per interval.

use crate::error::{Error, Result};
use crate::mesh::CollocationGrid;
use crate::problem::{a_coeff, g_eval, h_eval, ProblemSpec, PsiKernel};

/// |H| below this at a collocation point is treated as a zero of H.
pub const H_ZERO_TOL: f64 = 1e-13;
/// Relative determinant threshold of the 2x2 systems.
pub const SINGULAR_TOL: f64 = 1e-12;

/// The collocation solution: values at t_{n,1}, t_{n,2} on every interval,
/// linear on each I_n = (t_{n-1}, t_n].
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    grid: CollocationGrid,
    values: Vec<[f64; 2]>,
}

impl PiecewiseLinear {
    pub fn new(grid: CollocationGrid, values: Vec<[f64; 2]>) -> Result<Self> {
        if values.len() != grid.intervals() {
            return Err(Error::domain(format!(
                "{} value pairs for {} intervals",
                values.len(),
                grid.intervals()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &CollocationGrid {
        &self.grid
    }

    /// (w(t_{n,1}), w(t_{n,2})) for n = 1..N, stored from index 0.
    pub fn values(&self) -> &[[f64; 2]] {
        &self.values
    }

    /// w(t_{n,j}).
    pub fn value(&self, n: usize, j: usize) -> f64 {
        self.values[n - 1][j - 1]
    }

    /// Evaluates w at t in (0, T]; a node t_n belongs to I_n.
    pub fn eval(&self, t: f64) -> Result<f64> {
        let n = self
            .grid
            .mesh()
            .locate(t)
            .ok_or_else(|| Error::domain(format!("t = {t} outside (0, T]")))?;
        Ok(self.eval_on(n, t))
    }

    /// As [`PiecewiseLinear::eval`], but also accepts t = 0, where the
    /// polynomial of I_1 is extended to the closed interval.
    pub fn eval_closed(&self, t: f64) -> Result<f64> {
        if t == 0.0 {
            Ok(self.eval_on(1, 0.0))
        } else {
            self.eval(t)
        }
    }

    /// The polynomial of interval n evaluated at t.
    pub fn eval_on(&self, n: usize, t: f64) -> f64 {
        let [w1, w2] = self.values[n - 1];
        w1 * self.grid.basis(n, 1).at(t) + w2 * self.grid.basis(n, 2).at(t)
    }
}

/// Shorthand for [`PiecewiseLinear::eval`].
pub fn eval_w(sol: &PiecewiseLinear, t: f64) -> Result<f64> {
    sol.eval(t)
}

/// Solves the collocation equations interval by interval.
pub fn solve_vie(spec: &ProblemSpec, grid: &CollocationGrid) -> Result<PiecewiseLinear> {
    let mut values: Vec<[f64; 2]> = Vec::with_capacity(grid.intervals());
    for n in 1..=grid.intervals() {
        let (matrix, rhs) = step_system(spec, grid, n, &values)?;
        values.push(solve_2x2(n, matrix, rhs)?);
    }
    PiecewiseLinear::new(grid.clone(), values)
}

/// Solves step n alone, given the solution on I_1..I_{n-1}.
pub fn solve_step(
    spec: &ProblemSpec,
    grid: &CollocationGrid,
    n: usize,
    history: &[[f64; 2]],
) -> Result<[f64; 2]> {
    if n == 0 || n > grid.intervals() || history.len() < n - 1 {
        return Err(Error::domain(format!(
            "cannot solve step {n} with {} prior values",
            history.len()
        )));
    }
    let (matrix, rhs) = step_system(spec, grid, n, &history[..n - 1])?;
    solve_2x2(n, matrix, rhs)
}

/// H^n - B^n and F^n for interval n.
fn step_system(
    spec: &ProblemSpec,
    grid: &CollocationGrid,
    n: usize,
    history: &[[f64; 2]],
) -> Result<([[f64; 2]; 2], [f64; 2])> {
    let mesh = grid.mesh();
    let alpha = spec.alpha();
    let mut matrix = [[0.0; 2]; 2];
    let mut rhs = [0.0; 2];
    let mut kernels: Vec<PsiKernel> = Vec::with_capacity(n);
    for j in 0..2 {
        let t = grid.points(n)[j];
        let h = h_eval(spec, t);
        if !(h.abs() >= H_ZERO_TOL) {
            return Err(Error::ZeroCoefficient { t });
        }
        let mut f = g_eval(spec, t)?;
        let mut diag = [0.0; 2];
        for mode in spec.sine_modes() {
            let lam_sq = mode.lambda() * mode.lambda();
            kernels.clear();
            kernels.extend((0..n).map(|k| PsiKernel::new(alpha, lam_sq, t - mesh.node(k))));
            let scale = 4.0 / mode.lambda();
            for m in 1..n {
                let c = scale * mode.h(mesh.midpoint(m));
                let (lo, hi) = (mesh.node(m - 1), mesh.node(m));
                for s in 0..2 {
                    let line = grid.basis(m, s + 1);
                    let a = kernels[m].apply(line, hi) - kernels[m - 1].apply(line, lo);
                    f += c * a * history[m - 1][s];
                }
            }
            let c = scale * mode.h(mesh.midpoint(n));
            let lo = mesh.node(n - 1);
            for (s, d) in diag.iter_mut().enumerate() {
                let line = grid.basis(n, s + 1);
                // upper limit t itself: Ψ(t, t) = L(t)
                *d += c * (line.at(t) - kernels[n - 1].apply(line, lo));
            }
        }
        matrix[j] = [-diag[0], -diag[1]];
        matrix[j][j] += h;
        rhs[j] = f;
    }
    Ok((matrix, rhs))
}

fn solve_2x2(step: usize, m: [[f64; 2]; 2], rhs: [f64; 2]) -> Result<[f64; 2]> {
    if m[0][1] == 0.0 && m[1][0] == 0.0 && m[0][0] != 0.0 && m[1][1] != 0.0 {
        // no kernel contribution: keep w = G/H exact
        return Ok([rhs[0] / m[0][0], rhs[1] / m[1][1]]);
    }
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let norm = m.iter().flatten().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if !(det.abs() >= SINGULAR_TOL * norm * norm) {
        return Err(Error::SingularSystem { step, det, norm });
    }
    Ok([
        (rhs[0] * m[1][1] - m[0][1] * rhs[1]) / det,
        (m[0][0] * rhs[1] - m[1][0] * rhs[0]) / det,
    ])
}

/// max over the collocation points of |H w - Σ a w - G|, with every
/// a-coefficient recomputed independently of the solver.
pub fn residual(spec: &ProblemSpec, grid: &CollocationGrid, sol: &PiecewiseLinear) -> Result<f64> {
    let mut worst = 0.0_f64;
    for n in 1..=grid.intervals() {
        for j in 1..=2 {
            let t = grid.point(n, j);
            let mut r = h_eval(spec, t) * sol.value(n, j) - g_eval(spec, t)?;
            for m in 1..=n {
                for s in 1..=2 {
                    r -= a_coeff(spec, grid, m, s, t)? * sol.value(m, s);
                }
            }
            worst = worst.max(r.abs());
        }
    }
    Ok(worst)
}
