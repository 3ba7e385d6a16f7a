//! Observation intervals `(s_i, s_{i+1}]` between consecutive ticks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TickSeries;
use crate::time::TimeStamp;

/// Half-open interval `(lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: TimeStamp,
    pub hi: TimeStamp,
}

impl Interval {
    pub fn new(lo: TimeStamp, hi: TimeStamp) -> Self {
        debug_assert!(lo < hi);
        Self { lo, hi }
    }

    pub fn len(&self) -> TimeStamp {
        self.hi - self.lo
    }

    pub fn shifted(&self, by: TimeStamp) -> Interval {
        Interval { lo: self.lo + by, hi: self.hi + by }
    }
}

/// Contiguous, pairwise-disjoint intervals with the price increment over each.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalFamily {
    intervals: Vec<Interval>,
    increments: Vec<f64>,
}

impl IntervalFamily {
    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    /// Always false: families built from valid series hold at least one interval.
    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// `(first lo, last hi)`.
    pub fn span(&self) -> (TimeStamp, TimeStamp) {
        (self.intervals[0].lo, self.intervals[self.intervals.len() - 1].hi)
    }

    /// Number of leading intervals whose right end is at most `horizon`.
    pub(crate) fn count_ending_by(&self, horizon: TimeStamp) -> usize {
        self.intervals.partition_point(|iv| iv.hi <= horizon)
    }
}

/// Maps a tick series to its consecutive intervals and increments.
pub fn build_intervals(series: &TickSeries) -> Result<IntervalFamily> {
    let times = series.times();
    if times.len() < 2 {
        return Err(Error::TooFewTicks(times.len()));
    }
    let intervals = times.windows(2).map(|w| Interval::new(w[0], w[1])).collect();
    let increments = series.prices().windows(2).map(|w| w[1] - w[0]).collect();
    Ok(IntervalFamily { intervals, increments })
}

/// Largest interval length across both families.
pub fn mesh_delta(x: &IntervalFamily, y: &IntervalFamily) -> TimeStamp {
    x.intervals.iter().chain(y.intervals.iter()).map(Interval::len).max().unwrap_or(TimeStamp::ZERO)
}
