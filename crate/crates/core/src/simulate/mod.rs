//! Seedable simulation of the Bachelier lead-lag model and of the sampling
//! schemes used to observe it.

mod bachelier;
pub mod rng;
mod sampling;

pub use bachelier::{simulate_bachelier, BachelierParams, PathPair};
pub use sampling::{sample, sample_until, SamplingScheme};

/// Hat function `φ(t) = (1 − |t|)·1{|t| ≤ 1}`.
pub fn hat_function(t: f64) -> f64 {
    if t.abs() <= 1.0 {
        1.0 - t.abs()
    } else {
        0.0
    }
}
