use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contrast::contrast_terms;
use crate::error::{Error, Result};
use crate::intervals::build_intervals;
use crate::simulate::rng::derive_seed;
use crate::simulate::{hat_function, sample, simulate_bachelier, BachelierParams, SamplingScheme};
use crate::sum::CompensatedSum;
use crate::time::TimeStamp;

/// Empirical versus closed-form moments of the contrast near the true lag,
/// for synchronous observation with period `Δ`:
/// mean `σ1σ2·T·ρ·φ((s−θ)/Δ)`, variance `σ1²σ2²·T·Δ·(1 + ρ²φ²)`.
///
/// Also reports the covariance of adjacent per-interval terms
/// `χ_i = ΔX_i·Σ_J ΔY_J`, whose closed form is zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentCheck {
    pub shift: TimeStamp,
    pub period: TimeStamp,
    pub n_sims: usize,
    pub empirical_mean: f64,
    pub empirical_var: f64,
    pub predicted_mean: f64,
    pub predicted_var: f64,
    /// Standard error of `empirical_mean`, from the sample variance.
    pub mean_standard_error: f64,
    pub adjacent_cov: f64,
    pub adjacent_cov_standard_error: f64,
}

struct SimStats {
    contrast: f64,
    adjacent: f64,
}

/// Requires `|shift − θ| ≤ period` and `n_sims ≥ 2`.
pub fn prop1_moments(
    params: &BachelierParams,
    period: TimeStamp,
    shift: TimeStamp,
    n_sims: usize,
    seed: u64,
) -> Result<MomentCheck> {
    params.validate()?;
    if period <= TimeStamp::ZERO {
        return Err(Error::InvalidArgument("period must be positive".into()));
    }
    if (shift - params.theta).abs() > period {
        return Err(Error::InvalidArgument(format!(
            "shift {shift} is more than one period from theta {}",
            params.theta
        )));
    }
    if n_sims < 2 {
        return Err(Error::InvalidArgument("n_sims must be at least 2".into()));
    }
    let res = params.resolution;
    let dn = res.to_units(period);
    let t = res.to_units(params.horizon);
    let phi = hat_function((shift - params.theta).ticks() as f64 / period.ticks() as f64);
    let s12 = params.sigma1 * params.sigma2;
    let rho = params.rho;
    let predicted_mean = s12 * t * rho * phi;
    let predicted_var = s12 * s12 * t * dn * (1.0 + rho * rho * phi * phi);
    let term_mean = s12 * rho * dn * phi;

    let scheme = SamplingScheme::Synchronous { period };
    let stats = (0..n_sims as u64)
        .into_par_iter()
        .map(|i| -> Result<SimStats> {
            let s = derive_seed(seed, i);
            let paths = simulate_bachelier(params, s)?;
            let (x, y) = sample(&paths, scheme, scheme, s)?;
            let fx = build_intervals(&x)?;
            let fy = build_intervals(&y)?;
            let terms = contrast_terms(&fx, &fy, shift, params.horizon)?;
            let contrast = terms.iter().copied().collect::<CompensatedSum>().total();
            let pairs = terms.len().saturating_sub(1).max(1);
            let adjacent =
                terms.windows(2).map(|w| (w[0] - term_mean) * (w[1] - term_mean)).collect::<CompensatedSum>().total()
                    / pairs as f64;
            Ok(SimStats { contrast, adjacent })
        })
        .collect::<Result<Vec<_>>>()?;

    let n = n_sims as f64;
    let (empirical_mean, empirical_var) = mean_var(stats.iter().map(|s| s.contrast));
    let (adjacent_cov, adjacent_var) = mean_var(stats.iter().map(|s| s.adjacent));
    Ok(MomentCheck {
        shift,
        period,
        n_sims,
        empirical_mean,
        empirical_var,
        predicted_mean,
        predicted_var,
        mean_standard_error: (empirical_var / n).sqrt(),
        adjacent_cov,
        adjacent_cov_standard_error: (adjacent_var / n).sqrt(),
    })
}

/// Mean and unbiased sample variance.
fn mean_var(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let n = values.clone().count() as f64;
    let mean = values.clone().collect::<CompensatedSum>().total() / n;
    let ss = values.map(|v| (v - mean) * (v - mean)).collect::<CompensatedSum>().total();
    (mean, ss / (n - 1.0))
}
