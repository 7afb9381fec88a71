//! Two- and three-parameter Mittag-Leffler values on the negative axis,
//! plus the kernels built from them.

use subdiff_inverse::mlf::{ml, ml_prabhakar, theta, MlParams};

fn main() -> subdiff_inverse::Result<()> {
    println!(
        "{:>10} {:>22} {:>22} {:>22}",
        "z", "E_{0.5,1}", "E_{0.5,0.5}", "E^2_{0.5,1}"
    );
    for z in [0.0, -0.5, -1.0, -5.0, -20.0, -100.0, -1e4] {
        println!(
            "{z:>10} {:>22.15e} {:>22.15e} {:>22.15e}",
            ml(0.5, 1.0, z)?,
            ml(0.5, 0.5, z)?,
            ml_prabhakar(0.5, 1.0, 2, z)?
        );
    }

    // E_{1,1}(z) = exp(z)
    let e = MlParams::new(1.0, 1.0, 1)?;
    println!(
        "E_1,1(-3) = {:.16e}, exp(-3) = {:.16e}",
        e.eval(-3.0)?,
        (-3.0f64).exp()
    );

    // Θ(t) = t^(γ-1) E_{α,γ}(-λ² t^α), the resolvent-type kernel of the solver
    let lam_sq = (2.0 * std::f64::consts::PI).powi(2);
    for t in [1e-4, 1e-2, 0.5, 1.0] {
        println!(
            "theta(0.4, 1, 4pi^2, {t}) = {:.12e}",
            theta(0.4, 1.0, lam_sq, t)?
        );
    }
    Ok(())
}
