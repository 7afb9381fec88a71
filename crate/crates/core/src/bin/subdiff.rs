use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use subdiff_inverse::cli::{
    emit, emit_surface, exit_status, run_convergence, run_surface, ErrorGrid, Format, RunConfig,
};
use subdiff_inverse::{Error, Result};

#[derive(Parser)]
#[command(
    name = "subdiff",
    version,
    about = "Source recovery for the two-parameter sub-diffusion benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Error / rate table of the recovered source over (delta, N)
    Converge(Overrides),
    /// Exact and reconstructed field u(x, t_n) inside a time window
    Surface(Overrides),
}

#[derive(Args)]
struct Overrides {
    /// TOML file with run settings; flags below take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    /// Grading exponents, comma separated
    #[arg(long, value_delimiter = ',')]
    delta: Option<Vec<f64>>,
    /// Interval counts, comma separated and ascending
    #[arg(long = "N", value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// Final time
    #[arg(long = "T")]
    t: Option<f64>,
    /// Output file (stdout if absent)
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json
    #[arg(long)]
    format: Option<Format>,
    /// fine-with-origin, fine or nodes
    #[arg(long)]
    error_grid: Option<ErrorGrid>,
    /// Field dump as NX,T_MIN,T_MAX
    #[arg(long, value_delimiter = ',')]
    surface: Option<Vec<f64>>,
}

impl Overrides {
    fn resolve(self) -> Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(p) => RunConfig::load(p)?,
            None => RunConfig::default(),
        };
        if let Some(v) = self.alpha {
            cfg.alpha = v;
        }
        if let Some(v) = self.gamma {
            cfg.gamma = v;
        }
        if let Some(v) = self.delta {
            cfg.deltas = v;
        }
        if let Some(v) = self.n {
            cfg.n_values = v;
        }
        if let Some(v) = self.t {
            cfg.horizon = v;
        }
        if let Some(v) = self.out {
            cfg.out = Some(v);
        }
        if let Some(v) = self.format {
            cfg.format = v;
        }
        if let Some(v) = self.error_grid {
            cfg.error_grid = v;
        }
        if let Some(v) = self.surface {
            if v.len() != 3 {
                return Err(Error::Config(format!(
                    "--surface takes NX,T_MIN,T_MAX, got {} values",
                    v.len()
                )));
            }
            if !(v[0] >= 2.0 && v[0].fract() == 0.0) {
                return Err(Error::Config(format!(
                    "surface NX = {} must be an integer >= 2",
                    v[0]
                )));
            }
            cfg.surface_nx = v[0] as usize;
            cfg.surface_window = [v[1], v[2]];
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Converge(o) => {
            let cfg = o.resolve()?;
            let rows = run_convergence(&cfg)?;
            emit(&rows, cfg.format, cfg.out.as_deref())?;
            for r in rows.iter().filter(|r| r.failed()) {
                eprintln!(
                    "cell N={} delta={} failed: {}",
                    r.n,
                    r.delta,
                    r.failure.as_deref().unwrap_or("")
                );
            }
            Ok(exit_status(&rows) == 0)
        }
        Command::Surface(o) => {
            let cfg = o.resolve()?;
            match run_surface(&cfg) {
                Ok(rows) => {
                    emit_surface(&rows, cfg.format, cfg.out.as_deref())?;
                    Ok(true)
                }
                Err(
                    e @ (Error::SingularSystem { .. }
                    | Error::ZeroCoefficient { .. }
                    | Error::Accuracy { .. }),
                ) => {
                    eprintln!("surface run failed: {e}");
                    Ok(false)
                }
                Err(e) => Err(e),
            }
        }
    }
}

fn main() -> ExitCode {
    // exit status 2 is reserved for failed cells, so usage errors get 1
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
