//! Arbitrary-precision reference values for E^rho_{alpha,beta}(-x).
//!
//! * alpha < 1, x^(1/alpha) <= SERIES_LIMIT: the defining power series,
//!   summed with enough working bits to absorb its cancellation;
//! * alpha < 1 beyond that: the algebraic expansion, whose optimally
//!   truncated remainder is of order exp(-x^(1/alpha)) < 1e-90;
//! * alpha = 1, integer beta: closed forms in terms of exp.
//!
//! Every result carries at least 50 correct digits before rounding to f64.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

pub const SERIES_LIMIT: f64 = 220.0;
const GUARD_BITS: u32 = 200;

fn fl(prec: u32, v: f64) -> Float {
    Float::with_val(prec, v)
}

fn rgamma_hp(prec: u32, arg: &Float) -> Float {
    // 1/Γ vanishes at the poles
    if arg.is_integer() && *arg <= 0 {
        return Float::with_val(prec, 0);
    }
    let g = Float::with_val(prec, arg.gamma_ref());
    Float::with_val(prec, 1) / g
}

/// Power series at precision chosen from the size of the largest term.
pub fn series_hp(alpha: f64, beta: f64, rho: u32, z: f64) -> Float {
    let x = z.abs();
    let growth_bits = if x > 0.0 {
        (x.powf(1.0 / alpha) * std::f64::consts::LOG2_E).ceil() as u32
    } else {
        0
    };
    let prec = GUARD_BITS + growth_bits + 64;
    let a = fl(prec, alpha);
    let b = fl(prec, beta);
    let zz = fl(prec, z);
    let mut sum = Float::with_val(prec, 0);
    let mut zk = Float::with_val(prec, 1);
    let tol = Float::with_val(prec, 2).pow(-(GUARD_BITS as i32) - 30);
    let peak = (x.powf(1.0 / alpha) / alpha).ceil() as usize + 10;
    let mut k: usize = 0;
    loop {
        let weight = match rho {
            1 => Float::with_val(prec, 1),
            _ => Float::with_val(prec, k + 1),
        };
        let arg = Float::with_val(prec, &a * (k as u32)) + &b;
        let term = Float::with_val(prec, &zk * &weight) * rgamma_hp(prec, &arg);
        sum += &term;
        if k > peak && k > 5 {
            let lhs = Float::with_val(prec, term.abs_ref());
            let rhs = Float::with_val(prec, sum.abs_ref()) * &tol;
            if lhs < rhs {
                break;
            }
        }
        zk *= &zz;
        k += 1;
        assert!(k < 20_000, "series oracle failed to converge");
    }
    sum
}

/// Algebraic expansion for large x at fixed working precision.
pub fn asymptotic_hp(alpha: f64, beta: f64, rho: u32, x: f64) -> Float {
    let prec = 320;
    let a = fl(prec, alpha);
    let b = fl(prec, beta);
    let inv_x = Float::with_val(prec, 1) / fl(prec, x);
    let mut pow = Float::with_val(prec, inv_x.clone().pow(rho));
    let mut sum = Float::with_val(prec, 0);
    let tol = Float::with_val(prec, 2).pow(-240);
    let mut quiet = 0;
    for k in 0..20_000u32 {
        let weight = match rho {
            1 => Float::with_val(prec, 1),
            _ => Float::with_val(prec, k + 1),
        };
        let arg = Float::with_val(prec, &b - Float::with_val(prec, &a * (rho + k)));
        let mut term = Float::with_val(prec, &pow * &weight) * rgamma_hp(prec, &arg);
        if k % 2 == 1 {
            term = -term;
        }
        let mag = Float::with_val(prec, term.abs_ref());
        sum += &term;
        if mag < Float::with_val(prec, sum.abs_ref()) * &tol {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
        pow *= &inv_x;
        assert!(k < 19_999, "asymptotic oracle did not converge at x = {x}");
    }
    sum
}

/// E_{1,m}(z) for integer m >= 0 from exp and a partial Taylor sum.
fn ml_alpha_one_hp(m: i64, z: f64) -> Float {
    let prec = 600;
    let zz = fl(prec, z);
    let ez = Float::with_val(prec, zz.exp_ref());
    match m {
        0 => Float::with_val(prec, &zz * &ez),
        1 => ez,
        _ => {
            let mut partial = Float::with_val(prec, 0);
            let mut term = Float::with_val(prec, 1);
            for k in 0..=(m - 2) {
                if k > 0 {
                    term = Float::with_val(prec, &term * &zz) / (k as u32);
                }
                partial += &term;
            }
            let diff = ez - partial;
            let zp = Float::with_val(prec, zz.pow(1 - m as i32));
            diff * zp
        }
    }
}

/// High-precision E^rho_{alpha,beta}(z) for z <= 0.
pub fn ml_hp(alpha: f64, beta: f64, rho: u32, z: f64) -> Float {
    assert!(z <= 0.0);
    let x = -z;
    if alpha == 1.0 {
        assert!(beta == beta.trunc(), "alpha = 1 oracle needs integer beta");
        let m = beta as i64;
        if x < 1e-3 {
            // closed forms cancel badly near zero; the series is cheap here
            return series_hp(alpha, beta, rho, z);
        }
        return match rho {
            1 => ml_alpha_one_hp(m, z),
            // E^2_{1,b} = E_{1,b-1} + (2-b) E_{1,b}
            _ => {
                let lower = ml_alpha_one_hp(m - 1, z);
                let same = ml_alpha_one_hp(m, z);
                lower + same * (2.0 - beta)
            }
        };
    }
    if x == 0.0 || x.powf(1.0 / alpha) <= SERIES_LIMIT {
        series_hp(alpha, beta, rho, z)
    } else {
        asymptotic_hp(alpha, beta, rho, x)
    }
}

pub fn ml_ref(alpha: f64, beta: f64, rho: u32, z: f64) -> f64 {
    ml_hp(alpha, beta, rho, z).to_f64()
}

pub fn gamma_ref(x: f64) -> f64 {
    Float::with_val(256, x).gamma().to_f64()
}

pub fn pi_hp(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}
