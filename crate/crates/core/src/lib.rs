pub mod benchmark;
pub mod cli;
pub mod collocation;
pub mod error;
pub mod mesh;
pub mod mlf;
pub mod problem;
pub mod reconstruct;

pub use error::{Error, Result};
