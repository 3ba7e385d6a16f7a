//! Integer tick timestamps.
//!
//! All time arithmetic (shifting by a candidate lag, comparing interval
//! endpoints) happens on integer tick counts, so interval overlap decisions
//! are exact at the boundaries.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A signed count of base time units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TimeStamp(pub i64);

impl TimeStamp {
    pub const ZERO: TimeStamp = TimeStamp(0);

    #[inline]
    pub fn ticks(self) -> i64 {
        self.0
    }

    #[inline]
    pub fn abs(self) -> TimeStamp {
        TimeStamp(self.0.abs())
    }
}

impl Add for TimeStamp {
    type Output = TimeStamp;
    #[inline]
    fn add(self, rhs: TimeStamp) -> TimeStamp {
        TimeStamp(self.0 + rhs.0)
    }
}

impl Sub for TimeStamp {
    type Output = TimeStamp;
    #[inline]
    fn sub(self, rhs: TimeStamp) -> TimeStamp {
        TimeStamp(self.0 - rhs.0)
    }
}

impl Neg for TimeStamp {
    type Output = TimeStamp;
    #[inline]
    fn neg(self) -> TimeStamp {
        TimeStamp(-self.0)
    }
}

impl fmt::Display for TimeStamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Number of ticks per model time unit. Defaults to one tick per 10⁻⁶ units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Resolution(i64);

impl Default for Resolution {
    fn default() -> Self {
        Resolution(1_000_000)
    }
}

impl Resolution {
    /// Panics if `ticks_per_unit` is not positive.
    pub fn new(ticks_per_unit: i64) -> Self {
        assert!(ticks_per_unit > 0, "resolution must be positive");
        Resolution(ticks_per_unit)
    }

    pub fn ticks_per_unit(self) -> i64 {
        self.0
    }

    /// Nearest timestamp to a real time expressed in model units.
    pub fn from_units(self, units: f64) -> TimeStamp {
        TimeStamp((units * self.0 as f64).round() as i64)
    }

    pub fn to_units(self, t: TimeStamp) -> f64 {
        t.0 as f64 / self.0 as f64
    }
}
