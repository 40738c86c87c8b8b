use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid cavity geometry: {0}")]
    InvalidGeometry(String),

    #[error("invalid duration {value}: proper times must be finite and non-negative")]
    InvalidDuration { value: f64 },

    #[error("position z = {z} lies outside the cavity [{a}, {b}]")]
    OutsideCavity { z: f64, a: f64, b: f64 },

    #[error("polylogarithm order {0} is not supported (only 4 and 6)")]
    UnsupportedOrder(u32),

    #[error("mode {mode} is outside the truncation window -{window}..={window}")]
    OutsideWindow { mode: i64, window: usize },

    #[error("window mismatch: {left} vs {right}")]
    WindowMismatch { left: usize, right: usize },

    #[error("a travel scenario needs at least one segment")]
    EmptyScenario,

    #[error("inconsistent state: {0}")]
    InconsistentState(String),

    #[error("quadrature did not converge: achieved error estimate {achieved:.3e} (target {target:.3e})")]
    QuadratureNonConvergence { achieved: f64, target: f64 },

    #[error("eigenvalue block of size {0} exceeds the closed-form solvers")]
    BlockTooLarge(usize),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("tolerance breach: {0}")]
    ToleranceBreach(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ToleranceBreach(_) => 3,
            Error::Io { .. } => 4,
            _ => 2,
        }
    }
}
