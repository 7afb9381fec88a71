//! A manufactured test problem with closed-form source and field.
//!
//! With λ_1 = 2π, λ_2 = 4π the only nonzero data are
//!
//!   h_10 = (λ_1² - 1)/(2λ_1²),  h_11 = 1/(4λ_1),  h_21(t) = t,  h_22 = 2,  g_22 = 1,
//!
//! and D^{alpha,gamma} q = 1, so that H = G = 1, E(t, τ) = Θ^alpha_1(t - τ) and
//!
//!   w(t) = [λ_1² - E_alpha((1 - λ_1²) t^alpha)] / (λ_1² - 1).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::mlf::{eval_unchecked, theta};
use crate::problem::{time_fn, Family, FourierMode, ProblemSpec};

fn e(alpha: f64, beta: f64, z: f64) -> f64 {
    eval_unchecked(alpha, beta, 1, z)
}

fn e2(alpha: f64, beta: f64, z: f64) -> f64 {
    eval_unchecked(alpha, beta, 2, z)
}

/// Orders and the constants λ_1, λ_2, k_1 = 1/(λ_1² - 1), k_2 = λ_1² k_1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchmarkCase {
    pub alpha: f64,
    pub gamma: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub k1: f64,
    pub k2: f64,
}

/// The four nonzero Fourier coefficients of the exact field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactCoeffs {
    pub u10: f64,
    pub u11: f64,
    pub u21: f64,
    pub u22: f64,
}

impl BenchmarkCase {
    pub fn new(alpha: f64, gamma: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= gamma && gamma <= 1.0) {
            return Err(Error::domain(format!(
                "benchmark needs 0 < alpha <= gamma <= 1, got alpha = {alpha}, gamma = {gamma}"
            )));
        }
        let lambda1 = 2.0 * PI;
        let k1 = 1.0 / (lambda1 * lambda1 - 1.0);
        Ok(Self {
            alpha,
            gamma,
            lambda1,
            lambda2: 4.0 * PI,
            k1,
            k2: lambda1 * lambda1 * k1,
        })
    }

    fn lam1_sq(&self) -> f64 {
        self.lambda1 * self.lambda1
    }

    pub fn h10(&self) -> f64 {
        (self.lam1_sq() - 1.0) / (2.0 * self.lam1_sq())
    }

    pub fn h11(&self) -> f64 {
        1.0 / (4.0 * self.lambda1)
    }

    /// The problem as generic data; nothing downstream knows it is special.
    pub fn problem(&self) -> ProblemSpec {
        let h10 = self.h10();
        let h11 = self.h11();
        let mode = |family, index, h: fn(f64) -> f64, g| {
            FourierMode::new(family, index, time_fn(h), g).expect("valid mode index")
        };
        ProblemSpec::new(
            self.alpha,
            self.gamma,
            1.0,
            time_fn(move |_| h10),
            0.0,
            time_fn(|_| 1.0),
        )
        .expect("orders checked in BenchmarkCase::new")
        .with_mode(FourierMode::new(Family::Sine, 1, time_fn(move |_| h11), 0.0).expect("valid"))
        .and_then(|s| s.with_mode(mode(Family::Cosine, 1, |t| t, 0.0)))
        .and_then(|s| s.with_mode(mode(Family::Cosine, 2, |_| 2.0, 1.0)))
        .expect("distinct modes")
        .with_sigma(self.alpha)
    }

    /// The exact source.
    pub fn exact_w(&self, t: f64) -> f64 {
        let a = self.lam1_sq() - 1.0;
        self.k1 * (self.lam1_sq() - e(self.alpha, 1.0, -a * t.powf(self.alpha)))
    }

    /// (w * Θ^alpha_i)(t) for a mode with eigen-parameter `lambda`
    /// (lambda = 0 gives w * ω_alpha).
    pub fn w_conv_theta(&self, lambda: f64, t: f64) -> f64 {
        let al = self.alpha;
        let l1 = self.lam1_sq();
        let li = lambda * lambda;
        let ta = t.powf(al);
        let za = -(l1 - 1.0) * ta;
        let zi = -li * ta;
        (e(al, 1.0, za) + l1 * ta * e(al, al + 1.0, za)
            - e(al, 1.0, zi)
            - l1 * ta * e(al, al + 1.0, zi))
            / (li - l1 + 1.0)
    }

    /// ((τ w(τ)) * Θ^alpha_1)(t).
    pub fn tw_conv_theta1(&self, t: f64) -> f64 {
        let al = self.alpha;
        let ta = t.powf(al);
        let z1 = -self.lam1_sq() * ta;
        let za = -(self.lam1_sq() - 1.0) * ta;
        let t1a = t.powf(1.0 - al);
        self.k2 * t * ta * e(al, 2.0 + al, z1)
            + (al - 1.0) * (t * e(al, 2.0, z1) - t * e(al, 2.0, za) + t * ta * e2(al, 2.0 + al, za))
            - self.k1
                * (t1a * e(al, 2.0 - al, z1) - t1a * e(al, 2.0 - al, za) + t * e2(al, 2.0, za))
    }

    /// (w * τ^(2alpha-1) E²_{alpha,2alpha}(-λ_1² τ^alpha))(t).
    pub fn w_conv_prabhakar(&self, t: f64) -> f64 {
        let al = self.alpha;
        let ta = t.powf(al);
        let z1 = -self.lam1_sq() * ta;
        let za = -(self.lam1_sq() - 1.0) * ta;
        self.k1
            * (self.lam1_sq() * ta * ta * e2(al, 2.0 * al + 1.0, z1)
                + e(al, 1.0, z1)
                + ta * e2(al, 1.0 + al, z1)
                - e(al, 1.0, za))
    }

    pub fn exact_u_coeffs(&self, t: f64) -> Result<ExactCoeffs> {
        if !(t > 0.0) {
            return Err(Error::domain(format!(
                "exact coefficients need t > 0, got {t}"
            )));
        }
        let lam2_sq = self.lambda2 * self.lambda2;
        Ok(ExactCoeffs {
            u10: self.h10() * self.w_conv_theta(0.0, t),
            u11: self.h11() * self.w_conv_theta(self.lambda1, t),
            u21: self.tw_conv_theta1(t) - 0.5 * self.w_conv_prabhakar(t),
            u22: 2.0 * self.w_conv_theta(self.lambda2, t)
                + theta(self.alpha, self.gamma, lam2_sq, t)?,
        })
    }

    /// u(x, t) = 2u_10 + 4(1-x) sin(λ_1 x) u_11 + 4 cos(λ_1 x) u_21 + 4 cos(λ_2 x) u_22.
    pub fn exact_u(&self, x: f64, t: f64) -> Result<f64> {
        let c = self.exact_u_coeffs(t)?;
        Ok(field(&c, self.lambda1, self.lambda2, x))
    }
}

fn field(c: &ExactCoeffs, l1: f64, l2: f64, x: f64) -> f64 {
    2.0 * c.u10
        + 4.0 * (1.0 - x) * (l1 * x).sin() * c.u11
        + 4.0 * (l1 * x).cos() * c.u21
        + 4.0 * (l2 * x).cos() * c.u22
}

/// Shorthand for [`BenchmarkCase::problem`] with validated orders.
pub fn make_problem(alpha: f64, gamma: f64) -> Result<ProblemSpec> {
    Ok(BenchmarkCase::new(alpha, gamma)?.problem())
}
