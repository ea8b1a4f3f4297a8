use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid stiffness: Omega^2 = {omega_sq} must be positive (need a2 - 2c > 0 and m > 0)")]
    InvalidStiffness { omega_sq: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("eigensolver error in {context}: no convergence")]
    Eigensolver { context: String },

    #[error("unsupported potential shape: {0}")]
    UnsupportedPotential(String),

    #[error("basis too large: {count} configurations exceeds cap {cap}")]
    BasisTooLarge { count: u128, cap: u128 },

    #[error("internal consistency error: {0}")]
    Inconsistent(String),

    #[error("excitation order {alpha} is beyond the cutoff {ncut}")]
    OrderBeyondCutoff { alpha: usize, ncut: usize },

    #[error("excitation order must be at least 1 (the vacuum is not an excitation)")]
    NotAnExcitation,

    #[error("band incomplete: alpha = {alpha} has no identified state at k = {missing:?}")]
    BandIncomplete { alpha: usize, missing: Vec<usize> },

    #[error("unstable harmonic chain: 1 + 2C cos q = {value} <= 0 at q = {q}")]
    UnstableHarmonicChain { q: f64, value: f64 },

    #[error("time grid is empty")]
    EmptyGrid,

    #[error("no initial localization: contrast at t = 0 is {0}")]
    NoInitialLocalization(f64),

    #[error("dimension guard exceeded: {dim} > {cap}")]
    DimensionGuard { dim: usize, cap: usize },

    #[error("initial state norm {0} deviates from 1")]
    InitialStateNorm(f64),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("config file {path}, line {line}: {msg}")]
    Config { path: PathBuf, line: usize, msg: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParams(_)
            | Error::OrderBeyondCutoff { .. }
            | Error::NotAnExcitation
            | Error::EmptyGrid
            | Error::Config { .. }
            | Error::DimensionGuard { .. }
            | Error::BasisTooLarge { .. } => 1,
            _ => 2,
        }
    }
}
