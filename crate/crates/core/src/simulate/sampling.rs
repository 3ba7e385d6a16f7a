use rand::seq::index;
use serde::{Deserialize, Serialize};

use super::bachelier::PathPair;
use super::rng::{self, STREAM_SAMPLE_X, STREAM_SAMPLE_Y};
use crate::error::{Error, Result};
use crate::series::TickSeries;
use crate::time::TimeStamp;

/// How one asset is observed on the simulation mesh.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SamplingScheme {
    /// Every `period`, starting at 0.
    Synchronous { period: TimeStamp },
    /// `count` distinct points of the `base_mesh` lattice drawn uniformly
    /// without replacement; the first and last lattice points are always kept.
    UniformRandom { count: usize, base_mesh: TimeStamp },
}

fn indices(scheme: SamplingScheme, mesh: TimeStamp, end: TimeStamp, seed: u64, stream: u64) -> Result<Vec<usize>> {
    let step_of = |len: TimeStamp, what: &str| -> Result<usize> {
        if len <= TimeStamp::ZERO || len.ticks() % mesh.ticks() != 0 {
            return Err(Error::InfeasibleScheme(format!(
                "{what} {len} is not a positive multiple of the simulation mesh {mesh}"
            )));
        }
        Ok((len.ticks() / mesh.ticks()) as usize)
    };
    let last = (end.ticks() / mesh.ticks()) as usize;
    match scheme {
        SamplingScheme::Synchronous { period } => {
            let step = step_of(period, "period")?;
            if step > last {
                return Err(Error::InfeasibleScheme(format!("period {period} exceeds the span {end}")));
            }
            Ok((0..=last).step_by(step).collect())
        }
        SamplingScheme::UniformRandom { count, base_mesh } => {
            let step = step_of(base_mesh, "base mesh")?;
            let lattice = last / step + 1;
            if count < 2 || count > lattice {
                return Err(Error::InfeasibleScheme(format!(
                    "count {count} must lie in [2, {lattice}] for this span and base mesh"
                )));
            }
            let mut g = rng::stream(seed, stream);
            let mut picks: Vec<usize> =
                index::sample(&mut g, lattice - 2, count - 2).into_iter().map(|k| k + 1).collect();
            picks.sort_unstable();
            let mut out = Vec::with_capacity(count);
            out.push(0);
            out.extend(picks.into_iter().map(|k| k * step));
            out.push((lattice - 1) * step);
            Ok(out)
        }
    }
}

fn observe(paths: &PathPair, values: &[f64], idx: &[usize], label: &str) -> Result<TickSeries> {
    TickSeries::new(
        label,
        paths.resolution,
        idx.iter().map(|&k| paths.grid_times[k]).collect(),
        idx.iter().map(|&k| values[k]).collect(),
    )
}

/// Observes both paths over their full span `[0, T + δ]`.
pub fn sample(
    paths: &PathPair,
    scheme_x: SamplingScheme,
    scheme_y: SamplingScheme,
    seed: u64,
) -> Result<(TickSeries, TickSeries)> {
    sample_until(paths, scheme_x, scheme_y, seed, paths.span_end())
}

/// Observes both paths over `[0, end]`. X and Y draw from independent sub-streams of `seed`.
pub fn sample_until(
    paths: &PathPair,
    scheme_x: SamplingScheme,
    scheme_y: SamplingScheme,
    seed: u64,
    end: TimeStamp,
) -> Result<(TickSeries, TickSeries)> {
    if end <= TimeStamp::ZERO || end > paths.span_end() {
        return Err(Error::InfeasibleScheme(format!("observation window end {end} outside (0, {}]", paths.span_end())));
    }
    let ix = indices(scheme_x, paths.sim_mesh, end, seed, STREAM_SAMPLE_X)?;
    let iy = indices(scheme_y, paths.sim_mesh, end, seed, STREAM_SAMPLE_Y)?;
    Ok((observe(paths, &paths.x_values, &ix, "x")?, observe(paths, &paths.y_values, &iy, "y")?))
}
