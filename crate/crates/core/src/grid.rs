//! Finite grids of candidate shifts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::time::TimeStamp;

/// Strictly increasing, non-empty set of candidate shifts, all inside `(−δ, δ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftGrid {
    shifts: Vec<TimeStamp>,
    delta: TimeStamp,
}

impl ShiftGrid {
    /// Arbitrary grid; errors on an empty, unsorted or out-of-window input.
    pub fn new(shifts: Vec<TimeStamp>, delta: TimeStamp) -> Result<Self> {
        if delta <= TimeStamp::ZERO {
            return Err(Error::InvalidGrid(format!("delta must be positive, got {delta}")));
        }
        if shifts.is_empty() {
            return Err(Error::InvalidGrid("grid is empty".into()));
        }
        if let Some(i) = shifts.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid(format!("shifts not strictly increasing at index {}", i + 1)));
        }
        if let Some(s) = shifts.iter().find(|s| s.abs() >= delta) {
            return Err(Error::ShiftOutOfRange { shift: s.ticks(), delta: delta.ticks() });
        }
        Ok(Self { shifts, delta })
    }

    /// Every multiple of `mesh` in `[min, max]`. Errors if either bound leaves `(−δ, δ)`.
    pub fn uniform(min: TimeStamp, max: TimeStamp, mesh: TimeStamp, delta: TimeStamp) -> Result<Self> {
        if mesh <= TimeStamp::ZERO {
            return Err(Error::InvalidGrid(format!("mesh must be positive, got {mesh}")));
        }
        if min > max {
            return Err(Error::InvalidGrid(format!("grid min {min} exceeds max {max}")));
        }
        for bound in [min, max] {
            if bound.abs() >= delta {
                return Err(Error::ShiftOutOfRange { shift: bound.ticks(), delta: delta.ticks() });
            }
        }
        let m = mesh.ticks();
        let first = min.ticks().div_euclid(m) + i64::from(min.ticks().rem_euclid(m) != 0);
        let last = max.ticks().div_euclid(m);
        Self::new((first..=last).map(|k| TimeStamp(k * m)).collect(), delta)
    }

    /// Symmetric grid `{−k·mesh, …, 0, …, k·mesh}` with `k·mesh ≤ half_width`; always holds 0.
    pub fn symmetric(half_width: TimeStamp, mesh: TimeStamp, delta: TimeStamp) -> Result<Self> {
        Self::uniform(-half_width, half_width, mesh, delta)
    }

    /// Multiples of `mesh` within `half_count` meshes of `center`, clipped to `(−δ, δ)`.
    pub fn around(center: TimeStamp, half_count: i64, mesh: TimeStamp, delta: TimeStamp) -> Result<Self> {
        if mesh <= TimeStamp::ZERO || half_count < 0 {
            return Err(Error::InvalidGrid("mesh must be positive and half_count non-negative".into()));
        }
        let reach = TimeStamp(half_count * mesh.ticks());
        let edge = TimeStamp(delta.ticks() - 1);
        let min = (center - reach).max(-edge);
        let max = (center + reach).min(edge);
        Self::uniform(min, max, mesh, delta)
    }

    /// Every multiple of `mesh` strictly inside `(−δ, δ)`.
    pub fn full(mesh: TimeStamp, delta: TimeStamp) -> Result<Self> {
        let edge = TimeStamp(delta.ticks() - 1);
        Self::uniform(-edge, edge, mesh, delta)
    }

    pub fn shifts(&self) -> &[TimeStamp] {
        &self.shifts
    }

    pub fn delta(&self) -> TimeStamp {
        self.delta
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    /// Always false: grids are non-empty.
    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    pub fn contains_zero(&self) -> bool {
        self.shifts.binary_search(&TimeStamp::ZERO).is_ok()
    }

    pub fn max_abs_shift(&self) -> TimeStamp {
        self.shifts[0].abs().max(self.shifts[self.shifts.len() - 1].abs())
    }
}
