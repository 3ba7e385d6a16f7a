use serde::{Deserialize, Serialize};

use super::median;
use super::montecarlo::{montecarlo_estimates, MonteCarloConfig};
use crate::error::{Error, Result};
use crate::grid::ShiftGrid;
use crate::simulate::{BachelierParams, SamplingScheme};
use crate::time::TimeStamp;

/// How the observation scales with the nominal mesh `Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RateDesign {
    /// Both assets observed every `Δ` on `[0, T + δ]`.
    Synchronous,
    /// Each asset observed at `window_end/Δ + 1` points of the simulation
    /// mesh drawn uniformly on `[0, window_end]`: mean spacing `Δ`.
    UniformRandom { window_end: TimeStamp },
}

/// Grid mesh as a function of `Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GridMeshRule {
    /// `Δ / divisor`.
    PerDelta { divisor: i64 },
    /// The same mesh for every `Δ`.
    Fixed { mesh: TimeStamp },
}

impl GridMeshRule {
    fn mesh_for(self, dn: TimeStamp) -> Result<TimeStamp> {
        match self {
            GridMeshRule::PerDelta { divisor } if divisor >= 1 && dn.ticks() % divisor == 0 => {
                Ok(TimeStamp(dn.ticks() / divisor))
            }
            GridMeshRule::PerDelta { divisor } => {
                Err(Error::InvalidArgument(format!("mesh {dn} not divisible by {divisor}")))
            }
            GridMeshRule::Fixed { mesh } if mesh > TimeStamp::ZERO => Ok(mesh),
            GridMeshRule::Fixed { mesh } => Err(Error::InvalidArgument(format!("grid mesh {mesh} must be positive"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateStudy {
    pub design: RateDesign,
    pub grid_mesh: GridMeshRule,
    /// Grid spans `θ ± half_width_deltas·Δ`.
    pub half_width_deltas: i64,
    pub n_runs: usize,
    pub seed: u64,
}

/// Median and mean absolute error (model units) at one `Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateRow {
    pub delta_n: TimeStamp,
    pub grid_mesh: TimeStamp,
    pub median_abs_error: f64,
    pub mean_abs_error: f64,
    pub n_runs: usize,
}

/// One row per entry of `deltas`, in the given order.
pub fn rate_study(params: &BachelierParams, deltas: &[TimeStamp], study: &RateStudy) -> Result<Vec<RateRow>> {
    if deltas.is_empty() {
        return Err(Error::InvalidArgument("no mesh values given".into()));
    }
    deltas
        .iter()
        .map(|&dn| {
            let grid_mesh = study.grid_mesh.mesh_for(dn)?;
            let half_count = study.half_width_deltas * dn.ticks() / grid_mesh.ticks();
            let grid = ShiftGrid::around(params.theta, half_count, grid_mesh, params.delta)?;
            let mut cfg = MonteCarloConfig::synchronous(*params, dn, grid, study.n_runs, study.seed);
            if let RateDesign::UniformRandom { window_end } = study.design {
                let count = (window_end.ticks() / dn.ticks()) as usize + 1;
                let scheme = SamplingScheme::UniformRandom { count, base_mesh: params.sim_mesh };
                cfg.scheme_x = scheme;
                cfg.scheme_y = scheme;
                cfg.window_end = Some(window_end);
                cfg.horizon = cfg.horizon.min(window_end);
            }
            let mut errors: Vec<f64> = montecarlo_estimates(&cfg)?
                .into_iter()
                .map(|t| params.resolution.to_units((t - params.theta).abs()))
                .collect();
            let mean_abs_error = errors.iter().sum::<f64>() / errors.len() as f64;
            Ok(RateRow {
                delta_n: dn,
                grid_mesh,
                median_abs_error: median(&mut errors),
                mean_abs_error,
                n_runs: study.n_runs,
            })
        })
        .collect()
}
