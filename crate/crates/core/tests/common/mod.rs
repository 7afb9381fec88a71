//! Independent reference implementations shared by the integration tests:
//! a high-precision Mittag-Leffler oracle (MPFR) and adaptive quadrature.
#![allow(dead_code)]

pub mod checks;
pub mod mlf_grid;
pub mod oracle;
pub mod quad;

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}
