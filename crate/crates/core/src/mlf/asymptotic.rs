use std::f64::consts::PI;

use super::gamma::{gamma, rgamma};

/// Relative size below which two consecutive terms end the expansion.
const TAIL_TOL: f64 = 1e-17;

/// Algebraic expansion of E^rho_{alpha,beta}(-x) for large x,
///
///   (1/Γ(rho)) Σ_k (-1)^k Γ(rho+k)/(k! Γ(beta - alpha(rho+k))) x^(-rho-k),
///
/// plus, for alpha = 1 and integer beta, the exponential residue term.
///
/// Returns `None` when the terms start growing before they become
/// negligible (x too small for this (alpha, beta)), or when alpha = 1 with
/// non-integer beta and the exponential part is not negligible.
pub(crate) fn eval(alpha: f64, beta: f64, rho: u32, x: f64) -> Option<f64> {
    debug_assert!(x > 0.0);
    let rho_f = rho as f64;
    let inv_x = 1.0 / x;
    let mut pow = inv_x.powi(rho as i32);
    let mut sum = 0.0_f64;
    let mut prev_env = f64::INFINITY;
    let mut quiet = 0;
    let mut certified = false;
    for k in 0..200 {
        let kf = k as f64;
        let weight = match rho {
            1 => 1.0,
            _ => kf + 1.0,
        };
        let arg = beta - alpha * (rho_f + kf);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * weight * pow * rgamma(arg);
        sum += term;
        // |1/Γ(y)| <= Γ(1-y)/π for y < 0; the bound has no dips near the
        // poles, so it is what decides convergence or divergence
        let pole = arg <= 0.0 && arg == arg.trunc();
        let envelope = if arg > 0.0 || pole {
            // exact poles contribute exact zeros
            term.abs()
        } else {
            weight * pow * gamma(1.0 - arg) / PI
        };
        if !envelope.is_finite() {
            return None;
        }
        if envelope <= TAIL_TOL * sum.abs() {
            quiet += 1;
            if quiet >= 2 {
                certified = true;
                break;
            }
        } else {
            quiet = 0;
            if arg < 0.0 && envelope > prev_env {
                return None;
            }
        }
        if !pole {
            prev_env = envelope;
        }
        pow *= inv_x;
        if pow == 0.0 {
            certified = true;
            break;
        }
    }
    if !certified {
        return None;
    }

    if alpha == 1.0 {
        let decay = (-x).exp();
        if beta == beta.trunc() {
            // residue of e^s s^(rho-beta) / (s + x)^rho at s = -x
            let m = beta as i32;
            let sgn = |e: i32| if e.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let pw = |e: i32| sgn(e) * x.powi(e);
            let residue = match rho {
                1 => pw(1 - m) * decay,
                _ => decay * (pw(2 - m) + (2.0 - beta) * pw(1 - m)),
            };
            sum += residue;
        } else if decay * x.powf(beta.abs() + 2.0) > TAIL_TOL * sum.abs() {
            return None;
        }
    }
    Some(sum)
}
