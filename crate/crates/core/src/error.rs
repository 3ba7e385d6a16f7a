use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the estimator, the simulator and the analysis harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series needs at least 2 ticks, got {0}")]
    TooFewTicks(usize),
    #[error("times and prices differ in length ({times} vs {prices})")]
    LengthMismatch { times: usize, prices: usize },
    #[error("times not strictly increasing at index {0}")]
    NonIncreasingTimes(usize),
    #[error("non-finite price at index {0}")]
    NonFinitePrice(usize),
    #[error("series resolutions differ ({0} vs {1} ticks per unit)")]
    ResolutionMismatch(i64, i64),
    #[error("horizon {horizon} exceeds available span end {span_end}")]
    HorizonOutOfRange { horizon: i64, span_end: i64 },
    #[error("shift {shift} outside the admissible window (-{delta}, {delta})")]
    ShiftOutOfRange { shift: i64, delta: i64 },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("series are not synchronous and equispaced: {0}")]
    NotSynchronous(String),
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),
    #[error("infeasible sampling scheme: {0}")]
    InfeasibleScheme(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable code for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::TooFewTicks(_) => "too_few_ticks",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::NonIncreasingTimes(_) => "non_increasing_times",
            Error::NonFinitePrice(_) => "non_finite_price",
            Error::ResolutionMismatch(..) => "resolution_mismatch",
            Error::HorizonOutOfRange { .. } => "horizon_out_of_range",
            Error::ShiftOutOfRange { .. } => "shift_out_of_range",
            Error::InvalidGrid(_) => "invalid_grid",
            Error::NotSynchronous(_) => "not_synchronous",
            Error::InvalidParams(_) => "invalid_params",
            Error::InfeasibleScheme(_) => "infeasible_scheme",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}
