//! Monte Carlo experiments, moment checks, rate studies and the
//! signature-plot workflow.

mod moments;
mod montecarlo;
mod rate;
mod signature;

pub use moments::{prop1_moments, MomentCheck};
pub use montecarlo::{montecarlo_estimates, montecarlo_table, MonteCarloConfig, MonteCarloReport};
pub use rate::{rate_study, GridMeshRule, RateDesign, RateRow, RateStudy};
pub use signature::{realized_variance, signature_plot, subsample, SignaturePlot};

pub(crate) fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n == 0 {
        return f64::NAN;
    }
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}
