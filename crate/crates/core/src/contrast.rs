//! The shifted Hayashi–Yoshida covariation contrast.
//!
//! For a candidate shift `s` the contrast sums `X(I)·Y(J)` over every pair of
//! observation intervals with `I ∩ (J − s) ≠ ∅`. For `s ≥ 0` only intervals
//! `I` of `X` ending by the horizon take part; for `s < 0` only intervals `J`
//! of `Y` ending by the horizon do. Intervals straddling the horizon are
//! dropped whole.
//!
//! Both families are sorted and contiguous, so the `J` meeting a given
//! shifted `I` form a contiguous run whose bounds only move forward as `I`
//! advances. The sweep is `O(n_x + n_y + pairs)` per shift and accumulates
//! products in ascending `I`, then ascending `J` order.

use crate::error::{Error, Result};
use crate::intervals::{Interval, IntervalFamily};
use crate::series::TickSeries;
use crate::sum::CompensatedSum;
use crate::time::TimeStamp;

/// Whether two half-open intervals `(lo, hi]` intersect. Touching endpoints do not.
#[inline]
pub fn overlaps(a: Interval, b: Interval) -> bool {
    a.lo.max(b.lo) < a.hi.min(b.hi)
}

fn check_horizon(x: &IntervalFamily, y: &IntervalFamily, horizon: TimeStamp) -> Result<()> {
    let span_end = x.span().1.min(y.span().1);
    if horizon > span_end {
        return Err(Error::HorizonOutOfRange { horizon: horizon.ticks(), span_end: span_end.ticks() });
    }
    Ok(())
}

/// Calls `visit(i, j)` for every contributing pair, ascending in `i` then `j`.
fn sweep_pairs(
    x: &IntervalFamily,
    y: &IntervalFamily,
    shift: TimeStamp,
    horizon: TimeStamp,
    mut visit: impl FnMut(usize, usize),
) {
    let (nx, ny) = if shift >= TimeStamp::ZERO {
        (x.count_ending_by(horizon), y.len())
    } else {
        (x.len(), y.count_ending_by(horizon))
    };
    let xs = &x.intervals()[..nx];
    let ys = &y.intervals()[..ny];

    let mut start = 0;
    let mut end = 0;
    for (i, iv) in xs.iter().enumerate() {
        // J meets I + shift iff J.hi > I.lo + shift and J.lo < I.hi + shift.
        let lo = iv.lo + shift;
        let hi = iv.hi + shift;
        while start < ny && ys[start].hi <= lo {
            start += 1;
        }
        end = end.max(start);
        while end < ny && ys[end].lo < hi {
            end += 1;
        }
        for j in start..end {
            visit(i, j);
        }
    }
}

/// Shifted Hayashi–Yoshida contrast `U(shift)` up to `horizon`.
pub fn hy_contrast(x: &IntervalFamily, y: &IntervalFamily, shift: TimeStamp, horizon: TimeStamp) -> Result<f64> {
    check_horizon(x, y, horizon)?;
    let (dx, dy) = (x.increments(), y.increments());
    let mut acc = CompensatedSum::new();
    sweep_pairs(x, y, shift, horizon, |i, j| acc.add(dx[i] * dy[j]));
    Ok(acc.total())
}

/// Per-interval contributions `X(I)·Σ_J Y(J)` of the contrast, one entry per
/// participating interval of `x` in time order.
pub fn contrast_terms(
    x: &IntervalFamily,
    y: &IntervalFamily,
    shift: TimeStamp,
    horizon: TimeStamp,
) -> Result<Vec<f64>> {
    check_horizon(x, y, horizon)?;
    let nx = if shift >= TimeStamp::ZERO { x.count_ending_by(horizon) } else { x.len() };
    let (dx, dy) = (x.increments(), y.increments());
    let mut terms = vec![0.0; nx];
    sweep_pairs(x, y, shift, horizon, |i, j| terms[i] += dx[i] * dy[j]);
    Ok(terms)
}

/// Lagged realized covariance on synchronous equispaced data:
/// `Σ_i ΔX_i · ΔY_{i+k}` over every admissible `i`.
pub fn synchronous_contrast(x: &TickSeries, y: &TickSeries, k: i64) -> Result<f64> {
    if x.resolution() != y.resolution() {
        return Err(Error::ResolutionMismatch(x.resolution().ticks_per_unit(), y.resolution().ticks_per_unit()));
    }
    if x.times() != y.times() {
        return Err(Error::NotSynchronous("observation times differ".into()));
    }
    let t = x.times();
    let period = t[1] - t[0];
    if let Some(i) = t.windows(2).position(|w| w[1] - w[0] != period) {
        return Err(Error::NotSynchronous(format!("spacing changes at index {}", i + 1)));
    }
    let n = x.len() as i64 - 1;
    let (px, py) = (x.prices(), y.prices());
    let lo = 0.max(-k);
    let hi = n.min(n - k);
    let mut acc = CompensatedSum::new();
    for i in lo..hi {
        let i = i as usize;
        let j = (i as i64 + k) as usize;
        acc.add((px[i + 1] - px[i]) * (py[j + 1] - py[j]));
    }
    Ok(acc.total())
}
