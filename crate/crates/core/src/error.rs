use thiserror::Error;

/// Errors raised by the bound-state solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    /// The inverse-square channel is too attractive: 8·M·V₁ + (D+2ℓ−2)² < 0.
    #[error("fall to center: 8*M*V1 + (D+2l-2)^2 = {discriminant} < 0, no regular solution")]
    FallToCenter { discriminant: f64 },

    #[error("level n={n} is not bound (decay exponent c = {c} <= 0)")]
    NotBound { n: u32, c: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("normalization overflows f64 (ln K = {log_value})")]
    Overflow { log_value: f64 },

    #[error("AIM coefficients exceeded 1e300 at iteration {k}; rescale the inputs")]
    ScaleError { k: usize },

    #[error("AIM found {} stable roots, {requested} requested", found.len())]
    NoConvergence { found: Vec<f64>, requested: usize },

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("no bound states below the continuum threshold {threshold}")]
    NoBoundStates { threshold: f64 },

    #[error("level enumeration exceeded the cap of {cap} states")]
    TooManyLevels { cap: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
