use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::time::{Resolution, TimeStamp};

/// One asset's observation times and prices.
///
/// Times are strictly increasing, there are at least two ticks, and every
/// price is finite. Fields are private so these hold for every value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TickSeries {
    label: String,
    resolution: Resolution,
    times: Vec<TimeStamp>,
    prices: Vec<f64>,
}

impl TickSeries {
    pub fn new(
        label: impl Into<String>,
        resolution: Resolution,
        times: Vec<TimeStamp>,
        prices: Vec<f64>,
    ) -> Result<Self> {
        if times.len() != prices.len() {
            return Err(Error::LengthMismatch { times: times.len(), prices: prices.len() });
        }
        if times.len() < 2 {
            return Err(Error::TooFewTicks(times.len()));
        }
        if let Some(i) = times.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::NonIncreasingTimes(i + 1));
        }
        if let Some(i) = prices.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinitePrice(i));
        }
        Ok(Self { label: label.into(), resolution, times, prices })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn resolution(&self) -> Resolution {
        self.resolution
    }

    pub fn times(&self) -> &[TimeStamp] {
        &self.times
    }

    pub fn prices(&self) -> &[f64] {
        &self.prices
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    /// Always false: a valid series has at least two ticks.
    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn first_time(&self) -> TimeStamp {
        self.times[0]
    }

    pub fn last_time(&self) -> TimeStamp {
        self.times[self.times.len() - 1]
    }

    /// Same ticks with every price mapped through `f`.
    pub fn map_prices(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(self.label.clone(), self.resolution, self.times.clone(), self.prices.iter().map(|&p| f(p)).collect())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(v: &[i64]) -> Vec<TimeStamp> {
        v.iter().copied().map(TimeStamp).collect()
    }

    #[test]
    fn rejects_single_tick() {
        let err = TickSeries::new("a", Resolution::default(), ts(&[0]), vec![1.0]).unwrap_err();
        assert_eq!(err, Error::TooFewTicks(1));
    }

    #[test]
    fn rejects_duplicate_and_decreasing_times() {
        let r = Resolution::default();
        assert_eq!(TickSeries::new("a", r, ts(&[0, 1, 1]), vec![1.0; 3]).unwrap_err(), Error::NonIncreasingTimes(2));
        assert_eq!(TickSeries::new("a", r, ts(&[0, 2, 1]), vec![1.0; 3]).unwrap_err(), Error::NonIncreasingTimes(2));
    }

    #[test]
    fn rejects_nan_and_mismatch() {
        let r = Resolution::default();
        assert_eq!(TickSeries::new("a", r, ts(&[0, 1]), vec![1.0, f64::NAN]).unwrap_err(), Error::NonFinitePrice(1));
        assert!(matches!(TickSeries::new("a", r, ts(&[0, 1]), vec![1.0]), Err(Error::LengthMismatch { .. })));
    }
}
