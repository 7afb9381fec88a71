//! Dump exact vs reconstructed u on an (x, t) grid as CSV.

use subdiff_inverse::cli::{run_surface, surface_csv, RunConfig};

fn main() -> subdiff_inverse::Result<()> {
    let cfg = RunConfig {
        alpha: 0.5,
        deltas: vec![2.0],
        n_values: vec![40],
        surface_nx: 11,
        ..RunConfig::default()
    };
    let rows = run_surface(&cfg)?;
    print!("{}", surface_csv(&rows));
    let worst = rows.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    eprintln!("{} rows, max |u - u~| = {worst:.3e}", rows.len());
    Ok(())
}
