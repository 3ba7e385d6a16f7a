use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TickSeries;
use crate::sum::CompensatedSum;

/// Keeps ticks `0, k, 2k, …` (trading-time subsampling). `k = 1` is the identity.
pub fn subsample(series: &TickSeries, k: usize) -> Result<TickSeries> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("subsampling factor must be >= 1, got {k}")));
    }
    let times = series.times().iter().step_by(k).copied().collect();
    let prices = series.prices().iter().step_by(k).copied().collect();
    TickSeries::new(series.label(), series.resolution(), times, prices)
}

/// Sum of squared price increments.
pub fn realized_variance(series: &TickSeries) -> f64 {
    series.prices().windows(2).map(|w| (w[1] - w[0]) * (w[1] - w[0])).collect::<CompensatedSum>().total()
}

/// Realized volatility as a function of the subsampling factor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignaturePlot {
    pub ks: Vec<usize>,
    pub realized_vols: Vec<f64>,
}

/// `ks` must be non-empty, strictly increasing and `≥ 1`. A factor that
/// leaves fewer than two ticks is an error.
pub fn signature_plot(series: &TickSeries, ks: &[usize]) -> Result<SignaturePlot> {
    if ks.is_empty() {
        return Err(Error::InvalidArgument("no subsampling factors given".into()));
    }
    if ks.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("subsampling factors must be strictly increasing".into()));
    }
    let realized_vols =
        ks.iter().map(|&k| subsample(series, k).map(|s| realized_variance(&s))).collect::<Result<Vec<_>>>()?;
    Ok(SignaturePlot { ks: ks.to_vec(), realized_vols })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::time::{Resolution, TimeStamp};

    fn series(prices: &[f64]) -> TickSeries {
        let times = (0..prices.len() as i64).map(TimeStamp).collect();
        TickSeries::new("s", Resolution::default(), times, prices.to_vec()).unwrap()
    }

    #[test]
    fn subsample_counts_and_identity() {
        let s = series(&(0..10).map(f64::from).collect::<Vec<_>>());
        assert_eq!(subsample(&s, 1).unwrap(), s);
        let sub = subsample(&s, 3).unwrap();
        assert_eq!(sub.times(), &[TimeStamp(0), TimeStamp(3), TimeStamp(6), TimeStamp(9)]);
        assert!(subsample(&s, 0).is_err());
        assert!(matches!(subsample(&s, 10), Err(Error::TooFewTicks(1))));
    }

    #[test]
    fn signature_values() {
        let s = series(&[0.0, 1.0, 3.0]);
        assert_eq!(signature_plot(&s, &[1]).unwrap().realized_vols, vec![5.0]);
        assert_eq!(signature_plot(&s, &[1, 2]).unwrap().realized_vols, vec![5.0, 9.0]);
        let flat = series(&[2.0; 8]);
        assert_eq!(signature_plot(&flat, &[1, 2, 3]).unwrap().realized_vols, vec![0.0; 3]);
    }

    #[test]
    fn signature_rejects_bad_ks() {
        let s = series(&[0.0, 1.0, 3.0]);
        assert!(signature_plot(&s, &[]).is_err());
        assert!(signature_plot(&s, &[2, 1]).is_err());
        assert!(signature_plot(&s, &[0]).is_err());
    }
}
