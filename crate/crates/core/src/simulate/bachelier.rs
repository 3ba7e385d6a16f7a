use serde::{Deserialize, Serialize};

use super::rng::{self, STREAM_B, STREAM_W};
use crate::error::{Error, Result};
use crate::time::{Resolution, TimeStamp};

/// Parameters of the Bachelier lead-lag model
/// `X_t = x0 + σ1·B_t`, `Y_t = y0 + σ2·(ρ·B_{t−θ} + √(1−ρ²)·W_{t−θ})`,
/// observed on `[0, T + δ]` and simulated on a mesh of step `sim_mesh`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BachelierParams {
    pub x0: f64,
    pub y0: f64,
    pub sigma1: f64,
    pub sigma2: f64,
    pub rho: f64,
    pub theta: TimeStamp,
    pub horizon: TimeStamp,
    pub delta: TimeStamp,
    pub sim_mesh: TimeStamp,
    pub resolution: Resolution,
}

impl BachelierParams {
    /// `T = 1`, `δ = 1`, `θ = 0.1`, `x0 = y0 = 0`, `σ1 = σ2 = 1`, mesh 10⁻³.
    pub fn standard(rho: f64) -> Self {
        let r = Resolution::default();
        Self {
            x0: 0.0,
            y0: 0.0,
            sigma1: 1.0,
            sigma2: 1.0,
            rho,
            theta: r.from_units(0.1),
            horizon: r.from_units(1.0),
            delta: r.from_units(1.0),
            sim_mesh: r.from_units(1e-3),
            resolution: r,
        }
    }

    pub fn span_end(&self) -> TimeStamp {
        self.horizon + self.delta
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParams(m));
        if !(self.sigma1 > 0.0 && self.sigma1.is_finite() && self.sigma2 > 0.0 && self.sigma2.is_finite()) {
            return bad(format!("volatilities must be positive, got {} and {}", self.sigma1, self.sigma2));
        }
        if !(-1.0..=1.0).contains(&self.rho) {
            return bad(format!("rho must lie in [-1, 1], got {}", self.rho));
        }
        if !(self.x0.is_finite() && self.y0.is_finite()) {
            return bad("initial values must be finite".into());
        }
        if self.horizon <= TimeStamp::ZERO || self.delta <= TimeStamp::ZERO || self.sim_mesh <= TimeStamp::ZERO {
            return bad("horizon, delta and sim_mesh must be positive".into());
        }
        if self.theta.abs() >= self.delta {
            return bad(format!("|theta| = {} must be below delta = {}", self.theta.abs(), self.delta));
        }
        let m = self.sim_mesh.ticks();
        if self.span_end().ticks() % m != 0 {
            return bad("sim_mesh must divide T + delta".into());
        }
        if self.theta.ticks() % m != 0 {
            return bad("theta must be a multiple of sim_mesh".into());
        }
        Ok(())
    }

    pub(crate) fn mesh_in_units(&self) -> f64 {
        self.resolution.to_units(self.sim_mesh)
    }
}

/// Both price paths on the simulation mesh over `[0, T + δ]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathPair {
    pub resolution: Resolution,
    pub sim_mesh: TimeStamp,
    pub grid_times: Vec<TimeStamp>,
    pub x_values: Vec<f64>,
    pub y_values: Vec<f64>,
}

impl PathPair {
    pub fn span_end(&self) -> TimeStamp {
        self.grid_times[self.grid_times.len() - 1]
    }
}

/// Brownian motion on mesh indices `lo..=hi` (with `lo ≤ 0 ≤ hi`), pinned to
/// zero at index 0. Increments are drawn left to right.
fn brownian(seed: u64, stream: u64, lo: i64, hi: i64, step_sd: f64) -> Vec<f64> {
    let mut g = rng::stream(seed, stream);
    let steps = (hi - lo) as usize;
    let incs: Vec<f64> = (0..steps).map(|_| step_sd * rng::standard_normal(&mut g)).collect();
    let origin = (-lo) as usize;
    let mut path = vec![0.0; steps + 1];
    for i in origin + 1..=steps {
        path[i] = path[i - 1] + incs[i - 1];
    }
    for i in (0..origin).rev() {
        path[i] = path[i + 1] - incs[i];
    }
    path
}

/// Simulates `(X, Y)` on the mesh. Identical `(params, seed)` give identical paths.
pub fn simulate_bachelier(params: &BachelierParams, seed: u64) -> Result<PathPair> {
    params.validate()?;
    let m = params.sim_mesh.ticks();
    let n = params.span_end().ticks() / m;
    let lag = params.theta.ticks() / m;
    // B and W are needed at X times [0, n] and at lagged Y times [-lag, n - lag].
    let lo = 0.min(-lag);
    let hi = n.max(n - lag);
    let sd = params.mesh_in_units().sqrt();
    let b = brownian(seed, STREAM_B, lo, hi, sd);
    let w = brownian(seed, STREAM_W, lo, hi, sd);

    let rho = params.rho;
    let rho_c = (1.0 - rho * rho).max(0.0).sqrt();
    let mut grid_times = Vec::with_capacity(n as usize + 1);
    let mut x_values = Vec::with_capacity(n as usize + 1);
    let mut y_values = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let bx = (k - lo) as usize;
        let by = (k - lag - lo) as usize;
        grid_times.push(TimeStamp(k * m));
        x_values.push(params.x0 + params.sigma1 * b[bx]);
        y_values.push(params.y0 + params.sigma2 * (rho * b[by] + rho_c * w[by]));
    }
    Ok(PathPair { resolution: params.resolution, sim_mesh: params.sim_mesh, grid_times, x_values, y_values })
}
