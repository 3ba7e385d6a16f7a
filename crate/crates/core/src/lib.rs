//! Lead-lag estimation between two asynchronously observed price series.
//!
//! The estimator maximizes the absolute value of a shifted Hayashi–Yoshida
//! covariation contrast over a finite grid of candidate time shifts. Times are
//! integer tick counts so the half-open interval overlap test is exact.
//!
//! ```
//! use leadlag::{estimate_leadlag, ShiftGrid, TickSeries, TimeStamp, Resolution};
//!
//! let res = Resolution::default();
//! let times: Vec<TimeStamp> = (0..6).map(|i| TimeStamp(i * 1_000)).collect();
//! let x = TickSeries::new("x", res, times.clone(), vec![0.0, 1.0, -1.0, 2.0, 1.5, 3.0]).unwrap();
//! let y = x.clone();
//! let grid = ShiftGrid::uniform(TimeStamp(-2_000), TimeStamp(2_000), TimeStamp(1_000), TimeStamp(3_000)).unwrap();
//! let est = estimate_leadlag(&x, &y, &grid, TimeStamp(3_000)).unwrap();
//! assert_eq!(est.theta_hat, TimeStamp(0));
//! ```

pub mod analyze;
pub mod contrast;
mod error;
pub mod estimate;
pub mod grid;
pub mod intervals;
pub mod series;
pub mod simulate;
mod sum;
pub mod time;

pub use contrast::{contrast_terms, hy_contrast, overlaps, synchronous_contrast};
pub use error::{Error, Result};
pub use estimate::{contrast_curve, default_horizon, estimate_leadlag, ContrastCurve, LeadLagEstimate};
pub use grid::ShiftGrid;
pub use intervals::{build_intervals, mesh_delta, Interval, IntervalFamily};
pub use series::TickSeries;
pub use sum::CompensatedSum;
pub use time::{Resolution, TimeStamp};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/time_and_intervals.md")]
    mod time_and_intervals {}
    #[doc = include_str!("../../../book/src/contrast.md")]
    mod contrast {}
    #[doc = include_str!("../../../book/src/estimation.md")]
    mod estimation {}
    #[doc = include_str!("../../../book/src/simulation.md")]
    mod simulation {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
    #[doc = include_str!("../../../book/src/signature_plot.md")]
    mod signature_plot {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
