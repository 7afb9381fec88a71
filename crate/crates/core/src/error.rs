use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// No evaluation regime could certify the requested accuracy.
    #[error(
        "Mittag-Leffler evaluation not certified for alpha={alpha}, beta={beta}, rho={rho}, z={z}"
    )]
    Accuracy {
        alpha: f64,
        beta: f64,
        rho: u32,
        z: f64,
    },

    /// The 2x2 collocation system on interval `step` is numerically singular.
    #[error("singular collocation system on interval {step}: |det| = {det:e}, norm = {norm:e}")]
    SingularSystem { step: usize, det: f64, norm: f64 },

    /// H(t) vanishes at a collocation point.
    #[error("H(t) vanishes at collocation point t = {t:e}")]
    ZeroCoefficient { t: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
