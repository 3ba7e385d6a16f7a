use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimate::{estimate_leadlag, LeadLagEstimate};
use crate::grid::ShiftGrid;
use crate::simulate::rng::derive_seed;
use crate::simulate::{sample_until, simulate_bachelier, BachelierParams, SamplingScheme};
use crate::time::TimeStamp;

/// Full description of a simulate → sample → estimate experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloConfig {
    pub params: BachelierParams,
    pub scheme_x: SamplingScheme,
    pub scheme_y: SamplingScheme,
    /// End of the observation window; `None` observes all of `[0, T + δ]`.
    pub window_end: Option<TimeStamp>,
    pub grid: ShiftGrid,
    pub horizon: TimeStamp,
    pub n_runs: usize,
    pub seed: u64,
}

impl MonteCarloConfig {
    /// Synchronous observation with the given period, horizon `T`, full window.
    pub fn synchronous(params: BachelierParams, period: TimeStamp, grid: ShiftGrid, n_runs: usize, seed: u64) -> Self {
        let scheme = SamplingScheme::Synchronous { period };
        Self {
            params,
            scheme_x: scheme,
            scheme_y: scheme,
            window_end: None,
            horizon: params.horizon,
            grid,
            n_runs,
            seed,
        }
    }

    /// Estimate from run `index`.
    pub fn run(&self, index: u64) -> Result<LeadLagEstimate> {
        let seed = derive_seed(self.seed, index);
        let paths = simulate_bachelier(&self.params, seed)?;
        let end = self.window_end.unwrap_or_else(|| paths.span_end());
        let (x, y) = sample_until(&paths, self.scheme_x, self.scheme_y, seed, end)?;
        estimate_leadlag(&x, &y, &self.grid, self.horizon)
    }
}

/// Histogram of estimates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloReport {
    pub histogram: BTreeMap<TimeStamp, usize>,
    pub n_runs: usize,
    pub config: MonteCarloConfig,
}

impl MonteCarloReport {
    pub fn count(&self, theta_hat: TimeStamp) -> usize {
        self.histogram.get(&theta_hat).copied().unwrap_or(0)
    }

    pub fn count_in(&self, lo: TimeStamp, hi: TimeStamp) -> usize {
        self.histogram.range(lo..=hi).map(|(_, c)| c).sum()
    }
}

/// Estimates of every run, in run order. Runs execute in parallel.
pub fn montecarlo_estimates(config: &MonteCarloConfig) -> Result<Vec<TimeStamp>> {
    if config.n_runs < 1 {
        return Err(Error::InvalidArgument("n_runs must be at least 1".into()));
    }
    (0..config.n_runs as u64).into_par_iter().map(|i| config.run(i).map(|e| e.theta_hat)).collect()
}

pub fn montecarlo_table(config: &MonteCarloConfig) -> Result<MonteCarloReport> {
    let mut histogram = BTreeMap::new();
    for t in montecarlo_estimates(config)? {
        *histogram.entry(t).or_insert(0) += 1;
    }
    Ok(MonteCarloReport { histogram, n_runs: config.n_runs, config: config.clone() })
}
