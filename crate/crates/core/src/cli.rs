//! Convergence sweeps and field dumps for the manufactured problem, plus
//! their CSV / JSON output. The `subdiff` binary is a thin shell over this.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::benchmark::BenchmarkCase;
use crate::collocation::{solve_vie, PiecewiseLinear};
use crate::error::{Error, Result};
use crate::mesh::{CollocationGrid, GradedMesh, GAUSS_XI};
use crate::reconstruct::{coefficient_table, eval_u, HRule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config(format!("unknown format '{s}' (csv or json)"))),
        }
    }
}

/// Point set on which |w - w̃| is maximised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorGrid {
    /// Collocation points, midpoints and t_1..t_N, plus t_0 = 0 where w̃ is
    /// the polynomial of I_1. This is the set behind the reference error tables.
    #[default]
    FineWithOrigin,
    /// Collocation points, midpoints and t_1..t_N.
    Fine,
    /// t_1..t_N only.
    Nodes,
}

impl std::str::FromStr for ErrorGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fine-with-origin" => Ok(ErrorGrid::FineWithOrigin),
            "fine" => Ok(ErrorGrid::Fine),
            "nodes" => Ok(ErrorGrid::Nodes),
            _ => Err(Error::Config(format!(
                "unknown error grid '{s}' (fine-with-origin, fine or nodes)"
            ))),
        }
    }
}

/// Settings of a run. Read from a flat TOML file; command-line flags
/// override individual keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub alpha: f64,
    pub gamma: f64,
    pub deltas: Vec<f64>,
    pub n_values: Vec<usize>,
    pub horizon: f64,
    pub xi: [f64; 2],
    pub out: Option<PathBuf>,
    pub format: Format,
    pub error_grid: ErrorGrid,
    /// Number of x samples on [0, 1] for field dumps.
    pub surface_nx: usize,
    /// Time window [t_min, t_max] for field dumps.
    pub surface_window: [f64; 2],
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: 0.4,
            gamma: 1.0,
            deltas: vec![1.0, 2.0, 3.0, 4.0, 5.0],
            n_values: vec![10, 20, 40, 80, 160, 320],
            horizon: 1.0,
            xi: [GAUSS_XI.0, GAUSS_XI.1],
            out: None,
            format: Format::Csv,
            error_grid: ErrorGrid::FineWithOrigin,
            surface_nx: 21,
            surface_window: [0.26, 1.0],
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn validate(&self) -> Result<()> {
        BenchmarkCase::new(self.alpha, self.gamma)?;
        if self.deltas.is_empty() || self.n_values.is_empty() {
            return Err(Error::Config(
                "deltas and n_values must not be empty".into(),
            ));
        }
        if let Some(d) = self.deltas.iter().find(|d| !(**d >= 1.0)) {
            return Err(Error::Config(format!("delta = {d} must be >= 1")));
        }
        if self.n_values.contains(&0) {
            return Err(Error::Config("N must be positive".into()));
        }
        if !self.n_values.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Config("n_values must be strictly ascending".into()));
        }
        if !(self.horizon > 0.0) {
            return Err(Error::Config(format!(
                "horizon = {} must be positive",
                self.horizon
            )));
        }
        let [x1, x2] = self.xi;
        if !(0.0 < x1 && x1 < x2 && x2 < 1.0) {
            return Err(Error::Config(format!(
                "xi = ({x1}, {x2}) needs 0 < xi1 < xi2 < 1"
            )));
        }
        if self.surface_nx < 2 {
            return Err(Error::Config("surface_nx must be at least 2".into()));
        }
        let [lo, hi] = self.surface_window;
        if !(0.0 <= lo && lo < hi) {
            return Err(Error::Config(format!(
                "surface window [{lo}, {hi}] is empty"
            )));
        }
        Ok(())
    }

    fn grid(&self, n: usize, delta: f64) -> Result<CollocationGrid> {
        CollocationGrid::new(
            GradedMesh::new(n, delta, self.horizon)?,
            self.xi[0],
            self.xi[1],
        )
    }
}

/// One cell of a convergence table. `error` and `rate` are absent for a
/// failed cell, which carries the solver message instead.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    #[serde(rename = "N")]
    pub n: usize,
    pub delta: f64,
    pub error: Option<f64>,
    pub rate: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl ConvergenceRow {
    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

/// Process exit status for a finished sweep: 0, or 2 if any cell failed.
pub fn exit_status(rows: &[ConvergenceRow]) -> u8 {
    if rows.iter().any(ConvergenceRow::failed) {
        2
    } else {
        0
    }
}

/// max |w - w̃| over the chosen point set.
pub fn source_error(case: &BenchmarkCase, sol: &PiecewiseLinear, grid: ErrorGrid) -> Result<f64> {
    let cg = sol.grid();
    let mut points = match grid {
        ErrorGrid::Nodes => cg.mesh().nodes()[1..].to_vec(),
        _ => cg.fine_grid(),
    };
    if grid == ErrorGrid::FineWithOrigin {
        points.push(0.0);
    }
    let mut worst = 0.0_f64;
    for t in points {
        worst = worst.max((sol.eval_closed(t)? - case.exact_w(t)).abs());
    }
    Ok(worst)
}

/// Solves every (delta, N) cell and attaches log2(e_N / e_2N) to each
/// row whose N doubles the previous one. Rows are ordered by delta, then N.
pub fn run_convergence(config: &RunConfig) -> Result<Vec<ConvergenceRow>> {
    config.validate()?;
    let case = BenchmarkCase::new(config.alpha, config.gamma)?;
    let spec = case.problem();
    let cells: Vec<(f64, usize)> = config
        .deltas
        .iter()
        .flat_map(|&d| config.n_values.iter().map(move |&n| (d, n)))
        .collect();
    let results: Vec<Result<f64>> = cells
        .par_iter()
        .map(|&(delta, n)| {
            let grid = config.grid(n, delta)?;
            let sol = solve_vie(&spec, &grid)?;
            source_error(&case, &sol, config.error_grid)
        })
        .collect();

    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(cells.len());
    for (&(delta, n), res) in cells.iter().zip(results) {
        let (error, failure) = match res {
            Ok(e) => (Some(e), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let rate = match rows.last() {
            Some(prev) if prev.delta == delta && 2 * prev.n == n => match (prev.error, error) {
                (Some(a), Some(b)) => Some((a / b).log2()),
                _ => None,
            },
            _ => None,
        };
        rows.push(ConvergenceRow {
            n,
            delta,
            error,
            rate,
            failure,
        });
    }
    Ok(rows)
}

/// A sample of the exact and reconstructed field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceRow {
    pub x: f64,
    pub t: f64,
    pub exact: f64,
    pub approx: f64,
    pub abs_diff: f64,
}

/// Field on an x-grid of `surface_nx` points times the mesh nodes inside
/// `surface_window`, for the first delta and the largest N of the config.
pub fn run_surface(config: &RunConfig) -> Result<Vec<SurfaceRow>> {
    config.validate()?;
    let case = BenchmarkCase::new(config.alpha, config.gamma)?;
    let spec = case.problem();
    let delta = config.deltas[0];
    let n = *config.n_values.last().expect("validated non-empty");
    let grid = config.grid(n, delta)?;
    let sol = solve_vie(&spec, &grid)?;
    let table = coefficient_table(&spec, &sol, HRule::default())?;
    let [lo, hi] = config.surface_window;
    let xs: Vec<f64> = (0..config.surface_nx)
        .map(|k| k as f64 / (config.surface_nx - 1) as f64)
        .collect();
    let mut rows = Vec::new();
    for (k, &t) in table.times.iter().enumerate() {
        if t < lo || t > hi {
            continue;
        }
        for &x in &xs {
            let exact = case.exact_u(x, t)?;
            let approx = eval_u(&table, x, k + 1)?;
            rows.push(SurfaceRow {
                x,
                t,
                exact,
                approx,
                abs_diff: (exact - approx).abs(),
            });
        }
    }
    Ok(rows)
}

fn sci(v: f64) -> String {
    format!("{v:.6e}")
}

/// CSV with header `N,delta,error,rate`; empty cells where a value is absent.
pub fn table_csv(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from("N,delta,error,rate\n");
    for r in rows {
        let error = r.error.map(sci).unwrap_or_default();
        let rate = r.rate.map(|v| format!("{v:.6}")).unwrap_or_default();
        let _ = writeln!(out, "{},{},{},{}", r.n, r.delta, error, rate);
    }
    out
}

pub fn surface_csv(rows: &[SurfaceRow]) -> String {
    let mut out = String::from("x,t,exact,approx,abs_diff\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.x,
            sci(r.t),
            sci(r.exact),
            sci(r.approx),
            sci(r.abs_diff)
        );
    }
    out
}

fn render<T: Serialize>(rows: &[T], format: Format, csv: impl Fn(&[T]) -> String) -> String {
    match format {
        Format::Csv => csv(rows),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
    }
}

/// Writes to `path`, or to stdout when `path` is `None`.
fn write_out(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

pub fn emit(rows: &[ConvergenceRow], format: Format, path: Option<&Path>) -> Result<()> {
    write_out(&render(rows, format, table_csv), path)
}

pub fn emit_surface(rows: &[SurfaceRow], format: Format, path: Option<&Path>) -> Result<()> {
    write_out(&render(rows, format, surface_csv), path)
}
