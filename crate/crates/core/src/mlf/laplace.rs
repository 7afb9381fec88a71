//! Inversion of the Laplace transform
//!
//!   L{ t^(beta-1) E^rho_{alpha,beta}(z t^alpha) }(s) = s^(alpha rho - beta) / (s^alpha - z)^rho
//!
//! at t = 1 by the trapezoidal rule on the parabolic contour
//! s(u) = mu (1 + iu)^2, with (mu, h, N) chosen from the strength of the
//! branch-point singularity at the origin so that truncation,
//! discretisation and round-off errors all stay near the target.
//!
//! For real z <= 0 and 0 < alpha <= 1 no pole of the transform lies to
//! the right of the contour family (for alpha = 1 the pole sits on the
//! negative real axis, inside every parabola), so no residues are added.

use std::f64::consts::PI;

use num_complex::Complex64;

/// ln of the target accuracy.
const LOG_TARGET: f64 = -34.538_776_394_910_684; // ln(1e-15)
/// ln of the unit round-off.
const LOG_EPS: f64 = -36.043_653_389_117_154;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Contour {
    pub mu: f64,
    pub h: f64,
    pub n: usize,
}

/// Contour parameters for an unbounded region whose only singularity is
/// the origin, with singular strength `p`.
pub(crate) fn contour(p: f64) -> Contour {
    let t = 1.0_f64;
    let log_eps_target = LOG_TARGET;
    let phi_star = 0.0_f64;
    let sq_phi_star = phi_star.sqrt();

    let mut phibar = 0.01_f64;
    let mut sq_phibar = phibar.sqrt();
    let (f_min, f_max, f_tar) = (1.0_f64, 10.0_f64, 5.0_f64);

    let mut nj;
    let mut a;
    let mut sq_mu;
    let mut guard = 0;
    loop {
        let phi_t = phibar * t;
        let log_eps_phi_t = log_eps_target / phi_t;
        nj = (phi_t / PI * (1.0 - 1.5 * log_eps_phi_t + (1.0 - 2.0 * log_eps_phi_t).sqrt())).ceil();
        a = PI * nj / phi_t;
        sq_mu = sq_phibar * (4.0 - a).abs() / (7.0 - (1.0 + 12.0 * a).sqrt()).abs();
        let fbar = ((sq_phibar - sq_phi_star) / sq_mu).powf(-p);
        let done = p < 1e-14 || (f_min < fbar && fbar < f_max);
        guard += 1;
        if done || guard > 100 {
            break;
        }
        sq_phibar = f_tar.powf(-1.0 / p) * sq_mu + sq_phi_star;
        phibar = sq_phibar * sq_phibar;
    }
    let mut mu = sq_mu * sq_mu;
    let mut h = (-3.0 * a - 2.0 + 2.0 * (1.0 + 12.0 * a).sqrt()) / (4.0 - a) / nj;

    // keep exp(mu t) * eps under the target
    let threshold = (log_eps_target - LOG_EPS) / t;
    if mu > threshold {
        let q = if p.abs() < 1e-14 {
            0.0
        } else {
            f_tar.powf(-1.0 / p) * mu.sqrt()
        };
        let phibar = (q + sq_phi_star).powi(2);
        if phibar < threshold {
            let w = (LOG_EPS / (LOG_EPS - log_eps_target)).sqrt();
            let u = (-phibar * t / LOG_EPS).sqrt();
            mu = threshold;
            nj = (w * log_eps_target / 2.0 / PI / (u * w - 1.0)).ceil();
            h = w / nj;
        }
    }
    Contour {
        mu,
        h,
        n: nj as usize,
    }
}

pub(crate) fn eval(alpha: f64, beta: f64, rho: u32, z: f64) -> f64 {
    let rho_f = rho as f64;
    let p = (-2.0 * (alpha * rho_f - beta + 1.0)).max(0.0);
    let Contour { mu, h, n } = contour(p);
    let expo = alpha * rho_f - beta;

    let integrand = |u: f64| -> Complex64 {
        let one_iu = Complex64::new(1.0, u);
        let s = mu * one_iu * one_iu;
        let ds = Complex64::new(-2.0 * mu * u, 2.0 * mu);
        let denom = (s.powf(alpha) - z).powi(rho as i32);
        s.exp() * s.powf(expo) / denom * ds
    };

    // S(-u) = -conj(S(u)), so the symmetric sum is 2i times the imaginary parts
    let mut acc = 0.5 * integrand(0.0).im;
    for k in 1..=n {
        acc += integrand(h * k as f64).im;
    }
    h * acc / PI
}
