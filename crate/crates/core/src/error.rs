use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("mass must be positive and finite, got {0}")]
    InvalidMass(f64),

    #[error("speed {speed} is not below the speed of light")]
    Superluminal { speed: f64 },

    #[error("dilation factor must be >= 1, got {0}")]
    InvalidDilation(f64),

    #[error("packet width must be positive and finite, got {0}")]
    InvalidWidth(f64),

    #[error("spin direction must be a non-zero finite vector")]
    InvalidSpinDirection,

    #[error("grid truncates {lost:.3e} of the Gaussian mass (limit {limit:.0e})")]
    GridTruncation { lost: f64, limit: f64 },

    #[error("grid too coarse: {reason}")]
    GridTooCoarse { reason: String },

    #[error("expectation value has imaginary part {imag:.3e} for a kernel declared Hermitian")]
    NonHermitian { imag: f64 },

    #[error("F' = {norm:.3e} exceeds tolerance {tolerance:.3e}; Thomas form requires F' = 0")]
    FPrimeNonzero { norm: f64, tolerance: f64 },

    #[error("|e E.v| = {drift:.3e} exceeds the constant-gamma limit {limit:.3e}")]
    GammaNotConstant { drift: f64, limit: f64 },

    #[error("step size guard violated: dt * rate = {product:.3e} (limit {limit})")]
    StepTooLarge { product: f64, limit: f64 },

    #[error("integration aborted at step {step}: {source}")]
    IntegrationAborted { step: usize, source: Box<Error> },

    #[error("convergence ladder needs at least 3 rungs, got {0}")]
    LadderTooShort(usize),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Io(err.to_string())
    }
}
