//! Error / rate table for the benchmark. Pass alpha as the first argument
//! (default 0.4); the 0.67 run stops at delta = 4.

use subdiff_inverse::cli::{run_convergence, table_csv, RunConfig};

fn main() -> subdiff_inverse::Result<()> {
    let alpha: f64 = std::env::args()
        .nth(1)
        .map_or(Ok(0.4), |a| a.parse())
        .expect("alpha");
    let mut cfg = RunConfig {
        alpha,
        ..RunConfig::default()
    };
    if alpha > 0.5 {
        cfg.deltas.truncate(4);
    }
    let rows = run_convergence(&cfg)?;
    print!("{}", table_csv(&rows));

    for &delta in &cfg.deltas {
        let last = rows.iter().rfind(|r| r.delta == delta).unwrap();
        let expected = (alpha * delta).min(2.0);
        println!(
            "# delta {delta}: final rate {:.3}, min(2, alpha delta) = {expected:.2}",
            last.rate.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
