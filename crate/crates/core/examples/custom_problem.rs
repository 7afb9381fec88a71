//! A hand-built problem: one sine and one cosine mode with time-varying
//! coefficients. No exact solution here, so just look at the residual and
//! how w~ settles as the mesh is refined.

use subdiff_inverse::collocation::{residual, solve_vie};
use subdiff_inverse::mesh::{build_graded, CollocationGrid};
use subdiff_inverse::problem::{time_fn, Family, FourierMode, ProblemSpec};

fn main() -> subdiff_inverse::Result<()> {
    let spec = ProblemSpec::new(
        0.6,
        0.9,
        1.0,
        time_fn(|t| 1.0 + 0.5 * t),
        0.2,
        time_fn(|t| (3.0 * t).cos()),
    )?
    .with_mode(FourierMode::new(
        Family::Sine,
        1,
        time_fn(|t| 0.3 * (1.0 - t)),
        0.1,
    )?)?
    .with_mode(FourierMode::new(Family::Cosine, 1, time_fn(|_| 0.0), 0.05)?)?;
    let delta = spec.suggested_delta();
    println!("suggested grading exponent {delta:.2}");

    let mut prev: Option<f64> = None;
    for n in [10, 20, 40, 80, 160] {
        let grid = CollocationGrid::gauss(build_graded(n, delta, 1.0)?);
        let sol = solve_vie(&spec, &grid)?;
        let w_end = sol.eval_closed(1.0)?;
        let change = prev.map_or(String::new(), |p| format!("{:.2e}", (w_end - p).abs()));
        println!(
            "N = {n:>3}: w~(1) = {w_end:.10}  change {change:>9}  residual {:.1e}",
            residual(&spec, &grid, &sol)?
        );
        prev = Some(w_end);
    }
    Ok(())
}
