//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by meshing, assembly, solves and the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("mesh resolution too coarse: {0}")]
    UnderResolved(String),

    #[error("point ({0}, {1}) not found in mesh")]
    NotFound(f64, f64),

    #[error("empty space restriction: {0}")]
    EmptyRestriction(String),

    #[error("quadrature order {0} unavailable")]
    QuadratureOrder(usize),

    #[error("singular matrix (pivot {pivot})")]
    SingularMatrix { pivot: usize },

    #[error("mesh inversion in cell {cell} (det F = {det_f:.3e})")]
    MeshInversion { cell: usize, det_f: f64 },

    #[error("Newton did not converge after {iterations} iterations (residual {residual:.3e})")]
    NonConvergence {
        iterations: usize,
        residual: f64,
        history: Vec<f64>,
    },

    #[error("requested {requested} modes but numerical rank is {rank}")]
    RankDeficient { requested: usize, rank: usize },

    #[error("block layout mismatch: {0}")]
    LayoutMismatch(String),

    #[error("incompressible limit: Poisson ratio {0} must be < 0.5")]
    IncompressibleLimit(f64),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("missing prerequisite stage artifact: {0}")]
    MissingStage(String),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI. Stable across releases; documented in the README.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonConvergence { .. } => 2,
            Error::MeshInversion { .. } => 3,
            Error::RankDeficient { .. } => 4,
            Error::SingularMatrix { .. } => 5,
            Error::NotFound(..) => 6,
            Error::InvalidGeometry(_) | Error::UnderResolved(_) => 7,
            Error::Config(_) | Error::MissingStage(_) => 8,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
