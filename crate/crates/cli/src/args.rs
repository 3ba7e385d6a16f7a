use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use leadlag::simulate::{BachelierParams, SamplingScheme};
use leadlag::{default_horizon, TimeStamp};

use crate::config::{Format, GridSpec, Job, MonteCarloRunConfig, PairConfig, RunConfig, SigplotConfig, SimulateConfig};
use crate::error::{CliError, Result};
use crate::ticks::{ingest, Column, TickFileSpec};
use crate::units::{Frame, TimeUnit};

const ABOUT: &str = "Lead-lag estimation between two asynchronously observed price series";

const SIGN_CONVENTION: &str = "\
Sign convention: a positive theta_hat means the X asset leads: moves in X \
show up in Y theta_hat later. A negative value means Y leads X.

All times, in files and in flags, are decimals in --time-unit. They are \
converted exactly to integer ticks; a value finer than one tick is an error.";

#[derive(Debug, Parser)]
#[command(name = "leadlag", version, about = ABOUT, after_help = SIGN_CONVENTION)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the lead-lag time between two tick files
    #[command(after_help = SIGN_CONVENTION)]
    Estimate(PairArgs),
    /// Contrast value at every shift of the grid
    #[command(after_help = SIGN_CONVENTION)]
    Curve(PairArgs),
    /// Realized volatility after keeping one tick out of k
    Sigplot(SigplotArgs),
    /// Simulate a lead-lag pair and write x and y tick files
    Simulate(SimulateArgs),
    /// Histogram of estimates over repeated simulations
    #[command(after_help = SIGN_CONVENTION)]
    Montecarlo(MonteCarloArgs),
    /// Rebuild an artifact from the config embedded in it
    Replay(ReplayArgs),
}

#[derive(Debug, Args)]
pub struct FrameArgs {
    /// Unit of every time value read or written
    #[arg(long, value_enum, default_value_t = TimeUnit::Seconds)]
    pub time_unit: TimeUnit,
    /// Internal tick size, as ticks per second (a power of ten)
    #[arg(long, default_value_t = 1_000_000)]
    pub ticks_per_second: i64,
}

impl FrameArgs {
    fn frame(&self) -> Result<Frame> {
        Frame::new(self.time_unit, self.ticks_per_second)
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (a directory for `simulate`); standard output if absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReadArgs {
    /// Field delimiter of the tick files
    #[arg(long, default_value_t = ',')]
    pub delimiter: char,
    /// Tick files have no header row
    #[arg(long)]
    pub no_header: bool,
    /// Time column, by header name or zero-based index
    #[arg(long, default_value = "0")]
    pub time_column: Column,
    /// Price column, by header name or zero-based index
    #[arg(long, default_value = "1")]
    pub price_column: Column,
}

impl ReadArgs {
    fn spec(&self, path: &std::path::Path) -> TickFileSpec {
        TickFileSpec {
            path: path.to_path_buf(),
            time_column: self.time_column.clone(),
            price_column: self.price_column.clone(),
            delimiter: self.delimiter,
            header: !self.no_header,
        }
    }
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Smallest shift searched
    #[arg(long, allow_hyphen_values = true)]
    pub grid_min: Option<String>,
    /// Largest shift searched
    #[arg(long, allow_hyphen_values = true)]
    pub grid_max: Option<String>,
    /// Spacing of the shift grid; shifts are its multiples
    #[arg(long)]
    pub grid_mesh: Option<String>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// Tick file of the X asset
    #[arg(long)]
    pub x: PathBuf,
    /// Tick file of the Y asset
    #[arg(long)]
    pub y: PathBuf,
    #[command(flatten)]
    pub read: ReadArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Only intervals ending by this time enter the contrast
    /// [default: earliest series end minus the largest |shift|]
    #[arg(long)]
    pub horizon: Option<String>,
    /// Shifts must lie strictly inside (-delta, delta)
    /// [default: largest |grid bound| plus one tick]
    #[arg(long)]
    pub delta: Option<String>,
    #[command(flatten)]
    pub frame: FrameArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SigplotArgs {
    /// Tick file to subsample
    #[arg(long)]
    pub input: PathBuf,
    /// Subsampling factors, strictly increasing
    #[arg(long, value_delimiter = ',', default_value = "1,2,5,10,20")]
    pub ks: Vec<usize>,
    #[command(flatten)]
    pub read: ReadArgs,
    #[command(flatten)]
    pub frame: FrameArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, default_value_t = 0.75, allow_hyphen_values = true)]
    pub rho: f64,
    /// True lead-lag time, a multiple of --sim-mesh [default: 0.1 s]
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// Horizon T; paths cover [0, T + delta] [default: 1 s]
    #[arg(long)]
    pub horizon: Option<String>,
    /// Margin delta beyond T, also the bound on |shift| [default: 1 s]
    #[arg(long)]
    pub delta: Option<String>,
    /// Simulation step [default: 0.001 s]
    #[arg(long)]
    pub sim_mesh: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    pub sigma1: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sigma2: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub x0: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub y0: f64,
    /// `sync:PERIOD` or `uniform:COUNT[:BASE_MESH]` [default: sync at --sim-mesh]
    #[arg(long)]
    pub scheme_x: Option<String>,
    /// Same forms as --scheme-x
    #[arg(long)]
    pub scheme_y: Option<String>,
    /// Observe on [0, window-end] only [default: T + delta]
    #[arg(long)]
    pub window_end: Option<String>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub frame: FrameArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MonteCarloArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Number of simulated runs
    #[arg(long, default_value_t = 300)]
    pub runs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub frame: FrameArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    /// A CSV or JSON artifact written by this tool
    pub artifact: PathBuf,
    /// Where to write the rebuilt artifact (a directory for `simulate`)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_opt(frame: &Frame, v: &Option<String>) -> Result<Option<TimeStamp>> {
    v.as_deref().map(|s| frame.parse(s)).transpose()
}

fn required(frame: &Frame, v: &Option<String>, flag: &str) -> Result<TimeStamp> {
    parse_opt(frame, v)?.ok_or_else(|| CliError::InvalidArgument(format!("{flag} is required")))
}

fn default_units(frame: &Frame, v: &Option<String>, seconds: f64) -> Result<TimeStamp> {
    Ok(parse_opt(frame, v)?.unwrap_or_else(|| frame.resolution().from_units(seconds)))
}

fn parse_scheme(frame: &Frame, s: &str, sim_mesh: TimeStamp) -> Result<SamplingScheme> {
    let bad = || CliError::InvalidArgument(format!("scheme '{s}' is not sync:PERIOD or uniform:COUNT[:BASE_MESH]"));
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["sync" | "synchronous", period] => Ok(SamplingScheme::Synchronous { period: frame.parse(period)? }),
        ["uniform", count, rest @ ..] if rest.len() <= 1 => {
            let count = count.trim().parse().map_err(|_| bad())?;
            let base_mesh = match rest.first() {
                Some(m) => frame.parse(m)?,
                None => sim_mesh,
            };
            Ok(SamplingScheme::UniformRandom { count, base_mesh })
        }
        _ => Err(bad()),
    }
}

struct Model {
    params: BachelierParams,
    scheme_x: SamplingScheme,
    scheme_y: SamplingScheme,
    window_end: TimeStamp,
}

impl ModelArgs {
    fn resolve(&self, frame: &Frame) -> Result<Model> {
        let sim_mesh = default_units(frame, &self.sim_mesh, 1e-3)?;
        let params = BachelierParams {
            x0: self.x0,
            y0: self.y0,
            sigma1: self.sigma1,
            sigma2: self.sigma2,
            rho: self.rho,
            theta: default_units(frame, &self.theta, 0.1)?,
            horizon: default_units(frame, &self.horizon, 1.0)?,
            delta: default_units(frame, &self.delta, 1.0)?,
            sim_mesh,
            resolution: frame.resolution(),
        };
        params.validate()?;
        let scheme = |v: &Option<String>| match v {
            Some(s) => parse_scheme(frame, s, sim_mesh),
            None => Ok(SamplingScheme::Synchronous { period: sim_mesh }),
        };
        let window_end = parse_opt(frame, &self.window_end)?.unwrap_or(params.span_end());
        Ok(Model { params, scheme_x: scheme(&self.scheme_x)?, scheme_y: scheme(&self.scheme_y)?, window_end })
    }
}

/// Resolves flags into a complete config; returns `None` for `replay`.
pub fn resolve(command: &Command) -> Result<Option<RunConfig>> {
    Ok(Some(match command {
        Command::Estimate(a) | Command::Curve(a) => {
            let frame = a.frame.frame()?;
            let min = required(&frame, &a.grid.grid_min, "--grid-min")?;
            let max = required(&frame, &a.grid.grid_max, "--grid-max")?;
            let mesh = required(&frame, &a.grid.grid_mesh, "--grid-mesh")?;
            let delta = match parse_opt(&frame, &a.delta)? {
                Some(d) => d,
                None => min.abs().max(max.abs()) + TimeStamp(1),
            };
            let grid = GridSpec { min, max, mesh, delta };
            let x = a.read.spec(&a.x);
            let y = a.read.spec(&a.y);
            let horizon = match parse_opt(&frame, &a.horizon)? {
                Some(h) => h,
                None => default_horizon(&ingest(&x, &frame)?, &ingest(&y, &frame)?, &grid.build()?),
            };
            let job = PairConfig { x, y, grid, horizon };
            let job = if matches!(command, Command::Estimate(_)) { Job::Estimate(job) } else { Job::Curve(job) };
            RunConfig { frame, format: a.output.format, job }
        }
        Command::Sigplot(a) => {
            let frame = a.frame.frame()?;
            let job = Job::Sigplot(SigplotConfig { input: a.read.spec(&a.input), ks: a.ks.clone() });
            RunConfig { frame, format: a.output.format, job }
        }
        Command::Simulate(a) => {
            let frame = a.frame.frame()?;
            let m = a.model.resolve(&frame)?;
            let job = Job::Simulate(SimulateConfig {
                params: m.params,
                scheme_x: m.scheme_x,
                scheme_y: m.scheme_y,
                window_end: m.window_end,
                seed: a.seed,
            });
            RunConfig { frame, format: a.output.format, job }
        }
        Command::Montecarlo(a) => {
            let frame = a.frame.frame()?;
            let m = a.model.resolve(&frame)?;
            let p = m.params;
            let mesh = parse_opt(&frame, &a.grid.grid_mesh)?.unwrap_or(p.sim_mesh);
            let edge = p.delta - TimeStamp(1);
            let reach = TimeStamp(50 * mesh.ticks());
            let min = parse_opt(&frame, &a.grid.grid_min)?.unwrap_or((p.theta - reach).max(-edge));
            let max = parse_opt(&frame, &a.grid.grid_max)?.unwrap_or((p.theta + reach).min(edge));
            let job = Job::Montecarlo(MonteCarloRunConfig {
                params: p,
                scheme_x: m.scheme_x,
                scheme_y: m.scheme_y,
                window_end: m.window_end,
                grid: GridSpec { min, max, mesh, delta: p.delta },
                horizon: p.horizon.min(m.window_end),
                runs: a.runs,
                seed: a.seed,
            });
            RunConfig { frame, format: a.output.format, job }
        }
        Command::Replay(_) => return Ok(None),
    }))
}

pub fn output_of(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Estimate(a) | Command::Curve(a) => a.output.out.as_ref(),
        Command::Sigplot(a) => a.output.out.as_ref(),
        Command::Simulate(a) => a.output.out.as_ref(),
        Command::Montecarlo(a) => a.output.out.as_ref(),
        Command::Replay(a) => a.out.as_ref(),
    }
}
