use thiserror::Error;

/// Errors produced by ensemble construction, matrix assembly and kernel
/// analysis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ensemble: {0}")]
    InvalidEnsemble(String),

    #[error("separation undefined for fewer than two points")]
    SeparationUndefined,

    #[error("duplicate points: {0}")]
    DuplicatePoints(String),

    #[error("separation must be positive, got {0}")]
    NonPositiveSeparation(f64),

    #[error("moment table incomplete: missing index {0}")]
    MissingMoment(String),

    #[error("moments available up to degree {available}, assembly of order {order} requires degree {required}")]
    InsufficientDegree {
        available: usize,
        required: usize,
        order: usize,
    },

    #[error("rank tolerance must lie in (0, 1), got {0}")]
    InvalidTolerance(f64),

    #[error("matrix of size 0 has no kernel decomposition")]
    EmptyMatrix,

    #[error("coefficient system rank-deficient")]
    RankDeficientSystem,

    #[error("point is not a unit vector (|x| = {0})")]
    NonUnitVector(f64),

    #[error("no kernel: order too small or M = matrix size")]
    NoKernel,

    #[error("spectral gap too small: sigma[{rank}] = {above:.3e} vs sigma[{rank_p1}] = {below:.3e}")]
    SpectralGap {
        rank: usize,
        rank_p1: usize,
        above: f64,
        below: f64,
    },

    #[error("empty kernel basis")]
    EmptyKernel,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
