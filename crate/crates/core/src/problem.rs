//! Problem data in the bi-orthogonal Fourier basis
//!
//!   φ_10 = 2,  φ_1i = 4(1 - x) sin(λ_i x),  φ_2i = 4 cos(λ_i x),  λ_i = 2πi,
//!
//! and the quantities of the Volterra equation for the source,
//!
//!   H(t) w(t) - ∫_0^t E(t, τ) w(τ) dτ = G(t).

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mesh::{CollocationGrid, Linear};
use crate::mlf::{self, theta};

/// A real function of time, shared between threads.
pub type TimeFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Wraps a closure as a [`TimeFn`].
pub fn time_fn(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> TimeFn {
    Arc::new(f)
}

/// Which family of basis functions a mode belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// φ_1i = 4(1 - x) sin(λ_i x)
    Sine,
    /// φ_2i = 4 cos(λ_i x)
    Cosine,
}

/// One mode (k, i), i >= 1, of h(x, t) and g(x).
#[derive(Clone)]
pub struct FourierMode {
    family: Family,
    index: usize,
    lambda: f64,
    h: TimeFn,
    g: f64,
}

impl FourierMode {
    pub fn new(family: Family, index: usize, h: TimeFn, g: f64) -> Result<Self> {
        if index == 0 {
            return Err(Error::domain(
                "mode index must be >= 1 (the i = 0 mode is h10/g10)",
            ));
        }
        Ok(Self {
            family,
            index,
            lambda: 2.0 * PI * index as f64,
            h,
            g,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// λ_i = 2πi.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// h_ki(t).
    pub fn h(&self, t: f64) -> f64 {
        (self.h)(t)
    }

    /// g_ki.
    pub fn g(&self) -> f64 {
        self.g
    }
}

impl fmt::Debug for FourierMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FourierMode")
            .field("family", &self.family)
            .field("index", &self.index)
            .field("g", &self.g)
            .finish_non_exhaustive()
    }
}

/// Data of the inverse source problem: orders, horizon, the finite mode
/// lists of h and g, and the closed-form D^{alpha,gamma} q.
#[derive(Clone)]
pub struct ProblemSpec {
    alpha: f64,
    gamma: f64,
    horizon: f64,
    h10: TimeFn,
    g10: f64,
    dq: TimeFn,
    sigma: f64,
    modes: Vec<FourierMode>,
}

impl ProblemSpec {
    /// A spec without modes; add them with [`ProblemSpec::with_mode`].
    pub fn new(
        alpha: f64,
        gamma: f64,
        horizon: f64,
        h10: TimeFn,
        g10: f64,
        dq: TimeFn,
    ) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= gamma && gamma <= 1.0) {
            return Err(Error::domain(format!(
                "orders need 0 < alpha <= gamma <= 1, got alpha = {alpha}, gamma = {gamma}"
            )));
        }
        if !(horizon > 0.0) || !horizon.is_finite() {
            return Err(Error::domain(format!(
                "horizon T = {horizon} must be positive"
            )));
        }
        Ok(Self {
            alpha,
            gamma,
            horizon,
            h10,
            g10,
            dq,
            sigma: alpha,
            modes: Vec::new(),
        })
    }

    pub fn with_mode(mut self, mode: FourierMode) -> Result<Self> {
        if self.mode(mode.family, mode.index).is_some() {
            return Err(Error::domain(format!(
                "mode ({:?}, {}) given twice",
                mode.family, mode.index
            )));
        }
        self.modes.push(mode);
        Ok(self)
    }

    /// Regularity exponent, used only to suggest delta = 2/sigma.
    pub fn with_sigma(mut self, sigma: f64) -> Self {
        self.sigma = sigma;
        self
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn h10(&self, t: f64) -> f64 {
        (self.h10)(t)
    }

    pub fn g10(&self) -> f64 {
        self.g10
    }

    /// D^{alpha,gamma} q(t).
    pub fn dq(&self, t: f64) -> f64 {
        (self.dq)(t)
    }

    pub fn modes(&self) -> &[FourierMode] {
        &self.modes
    }

    pub fn mode(&self, family: Family, index: usize) -> Option<&FourierMode> {
        self.modes
            .iter()
            .find(|m| m.family == family && m.index == index)
    }

    /// Sine modes; only these enter the kernel E.
    pub fn sine_modes(&self) -> impl Iterator<Item = &FourierMode> {
        self.modes.iter().filter(|m| m.family == Family::Sine)
    }

    /// Grading exponent that restores the full second-order rate.
    pub fn suggested_delta(&self) -> f64 {
        (2.0 / self.sigma).max(1.0)
    }
}

impl fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("alpha", &self.alpha)
            .field("gamma", &self.gamma)
            .field("horizon", &self.horizon)
            .field("g10", &self.g10)
            .field("sigma", &self.sigma)
            .field("modes", &self.modes)
            .finish_non_exhaustive()
    }
}

/// φ_ki(x) with λ_i = 2πi: φ_10 = 2, φ_1i = 4(1-x) sin λ_i x, φ_2i = 4 cos λ_i x.
/// (Sine, 0) names φ_10; (Cosine, 0) does not exist.
pub fn phi(family: Family, index: usize, x: f64) -> Result<f64> {
    let lam = 2.0 * PI * index as f64;
    match (family, index) {
        (Family::Sine, 0) => Ok(2.0),
        (Family::Sine, _) => Ok(4.0 * (1.0 - x) * (lam * x).sin()),
        (Family::Cosine, 0) => Err(Error::domain("there is no cosine mode with index 0")),
        (Family::Cosine, _) => Ok(4.0 * (lam * x).cos()),
    }
}

/// The dual family: ψ_10 = x, ψ_1i = sin λ_i x, ψ_2i = x cos λ_i x.
pub fn phi_dual(family: Family, index: usize, x: f64) -> Result<f64> {
    let lam = 2.0 * PI * index as f64;
    match (family, index) {
        (Family::Sine, 0) => Ok(x),
        (Family::Sine, _) => Ok((lam * x).sin()),
        (Family::Cosine, 0) => Err(Error::domain("there is no cosine mode with index 0")),
        (Family::Cosine, _) => Ok(x * (lam * x).cos()),
    }
}

/// ∫_0^1 φ_1i dx.
pub fn sine_mode_mean(index: usize) -> f64 {
    2.0 / (PI * index as f64)
}

/// Ψ^alpha(t, τ, λ, L) = E_alpha(-λ(t-τ)^alpha) L(τ) + ν (t-τ) E_{alpha,2}(-λ(t-τ)^alpha),
/// ν the slope of L.
///
/// Ψ(t, b) - Ψ(t, a) = λ ∫_a^b (t-τ)^(alpha-1) E_{alpha,alpha}(-λ(t-τ)^alpha) L(τ) dτ.
pub fn psi(alpha: f64, t: f64, tau: f64, lambda: f64, line: Linear) -> Result<f64> {
    if !(tau <= t) {
        return Err(Error::domain(format!(
            "psi needs tau <= t, got tau = {tau}, t = {t}"
        )));
    }
    if !(lambda > 0.0) {
        return Err(Error::domain(format!("psi needs lambda > 0, got {lambda}")));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::domain(format!("alpha = {alpha} not in (0, 1]")));
    }
    let k = PsiKernel::new(alpha, lambda, t - tau);
    Ok(k.apply(line, tau))
}

/// The two Mittag-Leffler values Ψ needs at one distance d = t - τ; they
/// do not depend on L, so one evaluation serves every basis function.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PsiKernel {
    e1: f64,
    d_e2: f64,
}

impl PsiKernel {
    pub(crate) fn new(alpha: f64, lambda: f64, d: f64) -> Self {
        if d == 0.0 {
            return Self { e1: 1.0, d_e2: 0.0 };
        }
        let z = -lambda * d.powf(alpha);
        Self {
            e1: mlf::eval_unchecked(alpha, 1.0, 1, z),
            d_e2: d * mlf::eval_unchecked(alpha, 2.0, 1, z),
        }
    }

    pub(crate) fn apply(&self, line: Linear, tau: f64) -> f64 {
        self.e1 * line.at(tau) + line.slope() * self.d_e2
    }
}

/// a_{m,s}(t) = ∫ E(t, τ) L_{m,s}(τ) dτ over (t_{m-1}, min(t, t_m)), with
/// each h_1i frozen at the midpoint of I_m.
pub fn a_coeff(
    spec: &ProblemSpec,
    grid: &CollocationGrid,
    m: usize,
    s: usize,
    t: f64,
) -> Result<f64> {
    check_basis(grid, m, s)?;
    let mesh = grid.mesh();
    let lo = mesh.node(m - 1);
    if !(t > lo) {
        return Err(Error::domain(format!(
            "a_coeff needs t > t_(m-1) = {lo}, got {t}"
        )));
    }
    a_coeff_between(spec, grid, m, s, t, lo, t.min(mesh.node(m)))
}

/// As [`a_coeff`], over an arbitrary sub-range [lo, hi] of I_m with hi <= t.
pub fn a_coeff_between(
    spec: &ProblemSpec,
    grid: &CollocationGrid,
    m: usize,
    s: usize,
    t: f64,
    lo: f64,
    hi: f64,
) -> Result<f64> {
    check_basis(grid, m, s)?;
    if !(lo <= hi && hi <= t) {
        return Err(Error::domain(format!(
            "need lo <= hi <= t, got {lo}, {hi}, {t}"
        )));
    }
    let mid = grid.mesh().midpoint(m);
    let line = grid.basis(m, s);
    let alpha = spec.alpha();
    let mut acc = 0.0;
    for mode in spec.sine_modes() {
        let lam_sq = mode.lambda() * mode.lambda();
        let upper = PsiKernel::new(alpha, lam_sq, t - hi).apply(line, hi);
        let lower = PsiKernel::new(alpha, lam_sq, t - lo).apply(line, lo);
        acc += 4.0 * mode.h(mid) / mode.lambda() * (upper - lower);
    }
    Ok(acc)
}

fn check_basis(grid: &CollocationGrid, m: usize, s: usize) -> Result<()> {
    if m == 0 || m > grid.intervals() || !(s == 1 || s == 2) {
        return Err(Error::domain(format!("no basis function L_{{{m},{s}}}")));
    }
    Ok(())
}

/// G(t) = D^{alpha,gamma} q(t) + 4 Σ_i λ_i g_1i Θ^gamma_i(t).
pub fn g_eval(spec: &ProblemSpec, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("G needs t > 0, got {t}")));
    }
    let mut acc = spec.dq(t);
    for mode in spec.sine_modes() {
        if mode.g() != 0.0 {
            let lam = mode.lambda();
            acc += 4.0 * lam * mode.g() * theta(spec.alpha(), spec.gamma(), lam * lam, t)?;
        }
    }
    Ok(acc)
}

/// H(t) = ∫_0^1 h(x, t) dx = 2 h_10(t) + Σ_i (2/(πi)) h_1i(t); the cosine
/// modes integrate to zero.
pub fn h_eval(spec: &ProblemSpec, t: f64) -> f64 {
    let mut acc = 2.0 * spec.h10(t);
    for mode in spec.sine_modes() {
        acc += sine_mode_mean(mode.index()) * mode.h(t);
    }
    acc
}

/// E(t, τ) = 4 Σ_i λ_i h_1i(τ) Θ^alpha_i(t - τ). Diagnostic only; the
/// solver never integrates E numerically.
pub fn kernel_eval(spec: &ProblemSpec, t: f64, tau: f64) -> Result<f64> {
    if !(tau < t) {
        return Err(Error::domain(format!(
            "kernel needs tau < t, got tau = {tau}, t = {t}"
        )));
    }
    let mut acc = 0.0;
    for mode in spec.sine_modes() {
        let lam = mode.lambda();
        acc += 4.0 * lam * mode.h(tau) * theta(spec.alpha(), spec.alpha(), lam * lam, t - tau)?;
    }
    Ok(acc)
}
