//! Grid maximization of the contrast.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contrast::hy_contrast;
use crate::error::{Error, Result};
use crate::grid::ShiftGrid;
use crate::intervals::{build_intervals, mesh_delta, IntervalFamily};
use crate::series::TickSeries;
use crate::time::TimeStamp;

/// Contrast values over a grid and the location of the largest `|U|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContrastCurve {
    pub shifts: Vec<TimeStamp>,
    pub values: Vec<f64>,
    pub argmax_shift: TimeStamp,
    pub argmax_abs_value: f64,
}

impl ContrastCurve {
    /// Pairs evaluated shifts with values; the maximizer is the smallest
    /// shift whose `|value|` equals the maximum exactly.
    pub fn from_values(shifts: Vec<TimeStamp>, values: Vec<f64>) -> Result<Self> {
        if shifts.is_empty() || shifts.len() != values.len() {
            return Err(Error::InvalidArgument("curve needs one value per shift".into()));
        }
        let mut best = 0;
        for k in 1..values.len() {
            if values[k].abs() > values[best].abs() {
                best = k;
            }
        }
        Ok(Self { argmax_shift: shifts[best], argmax_abs_value: values[best].abs(), shifts, values })
    }

    pub fn argmax_index(&self) -> usize {
        self.shifts.partition_point(|s| *s < self.argmax_shift)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LeadLagEstimate {
    pub theta_hat: TimeStamp,
    /// Signed contrast at `theta_hat`.
    pub contrast_at_max: f64,
    pub mesh_delta_n: TimeStamp,
    pub grid_size: usize,
}

/// Evaluates the contrast at every grid shift. Shifts are evaluated in
/// parallel; the result does not depend on the thread count.
pub fn contrast_curve(
    x: &IntervalFamily,
    y: &IntervalFamily,
    grid: &ShiftGrid,
    horizon: TimeStamp,
) -> Result<ContrastCurve> {
    let values = grid.shifts().par_iter().map(|&s| hy_contrast(x, y, s, horizon)).collect::<Result<Vec<_>>>()?;
    ContrastCurve::from_values(grid.shifts().to_vec(), values)
}

/// Default horizon: earliest series end minus the largest grid shift, at least one tick.
pub fn default_horizon(x: &TickSeries, y: &TickSeries, grid: &ShiftGrid) -> TimeStamp {
    let end = x.last_time().min(y.last_time());
    (end - grid.max_abs_shift()).max(TimeStamp(1))
}

/// Lead-lag estimate: the smallest grid shift maximizing `|U|`.
///
/// A positive estimate means `x` leads `y`.
pub fn estimate_leadlag(
    x: &TickSeries,
    y: &TickSeries,
    grid: &ShiftGrid,
    horizon: TimeStamp,
) -> Result<LeadLagEstimate> {
    if x.resolution() != y.resolution() {
        return Err(Error::ResolutionMismatch(x.resolution().ticks_per_unit(), y.resolution().ticks_per_unit()));
    }
    if grid.is_empty() {
        return Err(Error::InvalidGrid("grid is empty".into()));
    }
    let fx = build_intervals(x)?;
    let fy = build_intervals(y)?;
    let curve = contrast_curve(&fx, &fy, grid, horizon)?;
    let k = curve.argmax_index();
    Ok(LeadLagEstimate {
        theta_hat: curve.argmax_shift,
        contrast_at_max: curve.values[k],
        mesh_delta_n: mesh_delta(&fx, &fy),
        grid_size: grid.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::time::Resolution;

    fn series(times: &[i64], prices: &[f64]) -> TickSeries {
        TickSeries::new("s", Resolution::default(), times.iter().copied().map(TimeStamp).collect(), prices.to_vec())
            .unwrap()
    }

    #[test]
    fn single_point_grid() {
        let s = series(&[0, 1, 2, 3], &[0.0, 1.0, 0.0, 2.0]);
        let f = build_intervals(&s).unwrap();
        let g = ShiftGrid::new(vec![TimeStamp(0)], TimeStamp(5)).unwrap();
        let c = contrast_curve(&f, &f, &g, TimeStamp(3)).unwrap();
        assert_eq!(c.shifts, vec![TimeStamp(0)]);
        assert_eq!(c.argmax_shift, TimeStamp(0));
        assert_eq!(c.argmax_abs_value, 6.0);
    }

    #[test]
    fn self_covariation_peaks_at_zero() {
        let t: Vec<i64> = (0..20).map(|i| i * 10).collect();
        let p: Vec<f64> = (0..20).map(|i| ((i * 7919) % 13) as f64).collect();
        let s = series(&t, &p);
        let g = ShiftGrid::uniform(TimeStamp(-10), TimeStamp(10), TimeStamp(10), TimeStamp(50)).unwrap();
        let e = estimate_leadlag(&s, &s, &g, TimeStamp(150)).unwrap();
        assert_eq!(e.theta_hat, TimeStamp(0));
        assert_eq!(e.mesh_delta_n, TimeStamp(10));
        assert_eq!(e.grid_size, 3);
    }

    #[test]
    fn constant_prices_tie_to_min_shift() {
        let s = series(&[0, 10, 20, 30], &[5.0; 4]);
        let g = ShiftGrid::uniform(TimeStamp(-8), TimeStamp(8), TimeStamp(2), TimeStamp(10)).unwrap();
        let e = estimate_leadlag(&s, &s, &g, TimeStamp(20)).unwrap();
        assert_eq!(e.theta_hat, TimeStamp(-8));
        assert_eq!(e.contrast_at_max, 0.0);
    }

    #[test]
    fn argmax_breaks_ties_low() {
        let c = ContrastCurve::from_values(
            vec![TimeStamp(-1), TimeStamp(0), TimeStamp(1), TimeStamp(2)],
            vec![1.0, -3.0, 3.0, 2.0],
        )
        .unwrap();
        assert_eq!(c.argmax_shift, TimeStamp(0));
        assert_eq!(c.argmax_index(), 1);
        assert_eq!(c.argmax_abs_value, 3.0);
    }

    #[test]
    fn default_horizon_leaves_room_for_shifts() {
        let a = series(&[0, 100], &[0.0, 1.0]);
        let b = series(&[0, 80], &[0.0, 1.0]);
        let g = ShiftGrid::symmetric(TimeStamp(30), TimeStamp(10), TimeStamp(50)).unwrap();
        assert_eq!(default_horizon(&a, &b, &g), TimeStamp(50));
        let g = ShiftGrid::symmetric(TimeStamp(90), TimeStamp(10), TimeStamp(100)).unwrap();
        assert_eq!(default_horizon(&a, &b, &g), TimeStamp(1));
    }
}
