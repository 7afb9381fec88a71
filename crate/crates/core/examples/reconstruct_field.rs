//! Rebuild u(x, t) from the recovered source and report the error against
//! the exact field.

use subdiff_inverse::benchmark::BenchmarkCase;
use subdiff_inverse::collocation::solve_vie;
use subdiff_inverse::mesh::{build_graded, CollocationGrid};
use subdiff_inverse::reconstruct::{coefficient_table, eval_u, HRule};

fn main() -> subdiff_inverse::Result<()> {
    let case = BenchmarkCase::new(0.5, 1.0)?;
    let spec = case.problem();
    for n in [20, 40, 80, 160] {
        let grid = CollocationGrid::gauss(build_graded(n, 2.0, 1.0)?);
        let sol = solve_vie(&spec, &grid)?;
        let table = coefficient_table(&spec, &sol, HRule::Collocation)?;
        let mut worst = 0.0f64;
        for k in 1..=n {
            for i in 0..=20 {
                let x = i as f64 / 20.0;
                let diff = eval_u(&table, x, k)? - case.exact_u(x, table.times[k - 1])?;
                worst = worst.max(diff.abs());
            }
        }
        println!("N = {n:>3}: max |u - u~| over nodes = {worst:.3e}");
    }

    let grid = CollocationGrid::gauss(build_graded(80, 2.0, 1.0)?);
    let table = coefficient_table(&spec, &solve_vie(&spec, &grid)?, HRule::Collocation)?;
    println!("u~(x, 1):");
    for i in 0..=10 {
        let x = i as f64 / 10.0;
        println!(
            "  {x:.1} {:+.6} (exact {:+.6})",
            eval_u(&table, x, 80)?,
            case.exact_u(x, 1.0)?
        );
    }
    Ok(())
}
