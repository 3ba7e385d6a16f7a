//! Fully resolved run configurations. Every artifact embeds one, and
//! `leadlag replay` rebuilds the artifact from it.

use std::path::Path;

use clap::ValueEnum;
use leadlag::simulate::{BachelierParams, SamplingScheme};
use leadlag::{ShiftGrid, TimeStamp};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::ticks::TickFileSpec;
use crate::units::Frame;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Every multiple of `mesh` in `[min, max]`, all inside `(−delta, delta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub min: TimeStamp,
    pub max: TimeStamp,
    pub mesh: TimeStamp,
    pub delta: TimeStamp,
}

impl GridSpec {
    pub fn build(&self) -> Result<ShiftGrid> {
        Ok(ShiftGrid::uniform(self.min, self.max, self.mesh, self.delta)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairConfig {
    pub x: TickFileSpec,
    pub y: TickFileSpec,
    pub grid: GridSpec,
    pub horizon: TimeStamp,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SigplotConfig {
    pub input: TickFileSpec,
    pub ks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulateConfig {
    pub params: BachelierParams,
    pub scheme_x: SamplingScheme,
    pub scheme_y: SamplingScheme,
    pub window_end: TimeStamp,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloRunConfig {
    pub params: BachelierParams,
    pub scheme_x: SamplingScheme,
    pub scheme_y: SamplingScheme,
    pub window_end: TimeStamp,
    pub grid: GridSpec,
    pub horizon: TimeStamp,
    pub runs: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Job {
    Estimate(PairConfig),
    Curve(PairConfig),
    Sigplot(SigplotConfig),
    Simulate(SimulateConfig),
    Montecarlo(MonteCarloRunConfig),
}

/// What a command did, in enough detail to do it again.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub frame: Frame,
    pub format: Format,
    #[serde(flatten)]
    pub job: Job,
}

const CSV_MARKER: &str = "# config: ";

impl RunConfig {
    /// The config as a one-line CSV comment, newline included.
    pub fn csv_preamble(&self) -> String {
        format!("{CSV_MARKER}{}\n", serde_json::to_string(self).expect("config serializes"))
    }

    /// Recovers the config embedded in a CSV or JSON artifact.
    pub fn from_artifact(path: &Path, text: &str) -> Result<Self> {
        let bad = |msg: String| CliError::BadConfig { path: path.to_path_buf(), msg };
        if text.trim_start().starts_with('{') {
            #[derive(Deserialize)]
            struct Wrapper {
                config: RunConfig,
            }
            let w: Wrapper = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
            return Ok(w.config);
        }
        let line = text
            .lines()
            .find_map(|l| l.strip_prefix(CSV_MARKER))
            .ok_or_else(|| bad("no embedded config line".into()))?;
        serde_json::from_str(line).map_err(|e| bad(e.to_string()))
    }
}
