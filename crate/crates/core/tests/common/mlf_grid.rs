//! The 500-point accuracy sweep for E^rho_{alpha,beta}(z), z in [-1e4, 0].

use super::oracle::ml_ref;
use subdiff_inverse::mlf::ml_prabhakar;

/// Absolute error allowed where the function crosses zero.
pub const NEAR_ZERO_ABS: f64 = 1e-13;

pub fn grid(points: usize) -> Vec<f64> {
    let logs = points - 1;
    std::iter::once(0.0)
        .chain((0..logs).map(|k| -10f64.powf(-6.0 + 10.0 * k as f64 / (logs - 1) as f64)))
        .collect()
}

pub fn betas(alpha: f64, gamma: f64) -> Vec<f64> {
    let mut b = vec![
        alpha,
        1.0,
        2.0 - alpha,
        2.0,
        2.0 * alpha,
        2.0 * alpha + 1.0,
        2.0 * alpha + 2.0,
        alpha + gamma,
    ];
    b.sort_by(f64::total_cmp);
    b.dedup();
    b
}

#[derive(Debug, Clone, Copy)]
pub struct Worst {
    pub alpha: f64,
    pub beta: f64,
    pub rho: u32,
    /// argument of the largest relative error among strictly passing points
    pub z: f64,
    pub rel: f64,
    /// points where only the near-zero or underflow allowance passed
    pub allowed: usize,
    /// largest absolute error among those
    pub allowed_abs: f64,
    pub failures: usize,
}

/// Sweeps one (alpha, beta, rho) over the grid. A point passes when the
/// relative error is within `tol`, or, where the function changes sign
/// over the grid and is below 1% of its peak there, when the absolute
/// error is within [`NEAR_ZERO_ABS`]; subnormal reference values only
/// need the absolute error to be subnormal too.
pub fn sweep(alpha: f64, beta: f64, rho: u32, zs: &[f64], tol: f64) -> Worst {
    let want: Vec<f64> = zs.iter().map(|&z| ml_ref(alpha, beta, rho, z)).collect();
    let peak = want.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let crosses = want.iter().any(|&v| v < 0.0) && want.iter().any(|&v| v > 0.0);
    let mut w = Worst {
        alpha,
        beta,
        rho,
        z: 0.0,
        rel: 0.0,
        allowed: 0,
        allowed_abs: 0.0,
        failures: 0,
    };
    for (&z, &v) in zs.iter().zip(&want) {
        let got = ml_prabhakar(alpha, beta, rho, z).expect("evaluation succeeds on the grid");
        let err = (got - v).abs();
        let rel = if v == 0.0 { err } else { err / v.abs() };
        if rel <= tol {
            if rel > w.rel {
                w.rel = rel;
                w.z = z;
            }
        } else if crosses && v.abs() <= 1e-2 * peak && err <= NEAR_ZERO_ABS
            || v.abs() < f64::MIN_POSITIVE && err < f64::MIN_POSITIVE
        {
            w.allowed += 1;
            w.allowed_abs = w.allowed_abs.max(err);
        } else {
            w.failures += 1;
        }
    }
    w
}
