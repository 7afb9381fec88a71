//! Recover the time-dependent source w(t) for the benchmark problem on a
//! graded mesh and compare with the closed form.

use subdiff_inverse::benchmark::BenchmarkCase;
use subdiff_inverse::collocation::{residual, solve_vie};
use subdiff_inverse::mesh::{build_graded, CollocationGrid};

fn main() -> subdiff_inverse::Result<()> {
    let case = BenchmarkCase::new(0.5, 1.0)?;
    let spec = case.problem();
    let grid = CollocationGrid::gauss(build_graded(40, 4.0, 1.0)?);
    let sol = solve_vie(&spec, &grid)?;

    println!("collocation residual {:.2e}", residual(&spec, &grid, &sol)?);
    println!("{:>8} {:>14} {:>14} {:>10}", "t", "w~", "w", "err");
    for t in [0.01, 0.1, 0.25, 0.5, 0.75, 1.0] {
        let approx = sol.eval_closed(t)?;
        let exact = case.exact_w(t);
        println!(
            "{t:>8} {approx:>14.8} {exact:>14.8} {:>10.2e}",
            (approx - exact).abs()
        );
    }
    Ok(())
}
