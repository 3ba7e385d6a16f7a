//! Runs a resolved configuration and renders its artifacts.

use leadlag::analyze::{montecarlo_table, signature_plot, MonteCarloConfig};
use leadlag::simulate::{sample_until, simulate_bachelier};
use leadlag::{build_intervals, contrast_curve, estimate_leadlag, TickSeries, TimeStamp};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::{Format, Job, RunConfig};
use crate::error::Result;
use crate::ticks::{ingest, render_ticks};
use crate::units::Frame;

/// One output document. `name` is set when a command writes several.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub name: Option<&'static str>,
    pub body: String,
}

impl Artifact {
    fn single(body: String) -> Self {
        Artifact { name: None, body }
    }
}

/// A time printed as an exact decimal JSON number.
fn time_json(frame: &Frame, t: TimeStamp) -> Box<RawValue> {
    RawValue::from_string(frame.format(t)).expect("decimal is valid JSON")
}

fn json_doc<T: Serialize>(config: &RunConfig, body: T) -> String {
    #[derive(Serialize)]
    struct Doc<'a, T> {
        config: &'a RunConfig,
        #[serde(flatten)]
        body: T,
    }
    let mut s = serde_json::to_string_pretty(&Doc { config, body }).expect("artifact serializes");
    s.push('\n');
    s
}

pub fn execute(config: &RunConfig) -> Result<Vec<Artifact>> {
    let frame = &config.frame;
    match &config.job {
        Job::Estimate(job) => {
            let x = ingest(&job.x, frame)?;
            let y = ingest(&job.y, frame)?;
            let grid = job.grid.build()?;
            let est = estimate_leadlag(&x, &y, &grid, job.horizon)?;
            let body = match config.format {
                Format::Csv => format!(
                    "{}theta_hat,contrast_at_max,mesh_delta_n,grid_size,horizon\n{},{},{},{},{}\n",
                    config.csv_preamble(),
                    frame.format(est.theta_hat),
                    est.contrast_at_max,
                    frame.format(est.mesh_delta_n),
                    est.grid_size,
                    frame.format(job.horizon),
                ),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Body {
                        theta_hat: Box<RawValue>,
                        contrast_at_max: f64,
                        mesh_delta_n: Box<RawValue>,
                        grid_size: usize,
                        horizon: Box<RawValue>,
                    }
                    json_doc(
                        config,
                        Body {
                            theta_hat: time_json(frame, est.theta_hat),
                            contrast_at_max: est.contrast_at_max,
                            mesh_delta_n: time_json(frame, est.mesh_delta_n),
                            grid_size: est.grid_size,
                            horizon: time_json(frame, job.horizon),
                        },
                    )
                }
            };
            Ok(vec![Artifact::single(body)])
        }
        Job::Curve(job) => {
            let x = ingest(&job.x, frame)?;
            let y = ingest(&job.y, frame)?;
            let grid = job.grid.build()?;
            let curve = contrast_curve(&build_intervals(&x)?, &build_intervals(&y)?, &grid, job.horizon)?;
            let body = match config.format {
                Format::Csv => {
                    let mut s = config.csv_preamble();
                    s.push_str("shift,contrast\n");
                    for (t, v) in curve.shifts.iter().zip(&curve.values) {
                        s.push_str(&format!("{},{}\n", frame.format(*t), v));
                    }
                    s
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        shift: Box<RawValue>,
                        contrast: f64,
                    }
                    #[derive(Serialize)]
                    struct Body {
                        theta_hat: Box<RawValue>,
                        rows: Vec<Row>,
                    }
                    let rows = curve
                        .shifts
                        .iter()
                        .zip(&curve.values)
                        .map(|(t, v)| Row { shift: time_json(frame, *t), contrast: *v })
                        .collect();
                    json_doc(config, Body { theta_hat: time_json(frame, curve.argmax_shift), rows })
                }
            };
            Ok(vec![Artifact::single(body)])
        }
        Job::Sigplot(job) => {
            let series = ingest(&job.input, frame)?;
            let plot = signature_plot(&series, &job.ks)?;
            let body = match config.format {
                Format::Csv => {
                    let mut s = config.csv_preamble();
                    s.push_str("k,realized_vol\n");
                    for (k, v) in plot.ks.iter().zip(&plot.realized_vols) {
                        s.push_str(&format!("{k},{v}\n"));
                    }
                    s
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        k: usize,
                        realized_vol: f64,
                    }
                    #[derive(Serialize)]
                    struct Body {
                        rows: Vec<Row>,
                    }
                    let rows = plot
                        .ks
                        .iter()
                        .zip(&plot.realized_vols)
                        .map(|(&k, &realized_vol)| Row { k, realized_vol })
                        .collect();
                    json_doc(config, Body { rows })
                }
            };
            Ok(vec![Artifact::single(body)])
        }
        Job::Simulate(job) => {
            let paths = simulate_bachelier(&job.params, job.seed)?;
            let (x, y) = sample_until(&paths, job.scheme_x, job.scheme_y, job.seed, job.window_end)?;
            let render = |s: &TickSeries| match config.format {
                Format::Csv => render_ticks(s, frame, &config.csv_preamble()),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        time: Box<RawValue>,
                        price: f64,
                    }
                    #[derive(Serialize)]
                    struct Body<'a> {
                        label: &'a str,
                        rows: Vec<Row>,
                    }
                    let rows = s
                        .times()
                        .iter()
                        .zip(s.prices())
                        .map(|(t, p)| Row { time: time_json(frame, *t), price: *p })
                        .collect();
                    json_doc(config, Body { label: s.label(), rows })
                }
            };
            Ok(vec![Artifact { name: Some("x"), body: render(&x) }, Artifact { name: Some("y"), body: render(&y) }])
        }
        Job::Montecarlo(job) => {
            let mc = MonteCarloConfig {
                params: job.params,
                scheme_x: job.scheme_x,
                scheme_y: job.scheme_y,
                window_end: Some(job.window_end),
                grid: job.grid.build()?,
                horizon: job.horizon,
                n_runs: job.runs,
                seed: job.seed,
            };
            let report = montecarlo_table(&mc)?;
            let body = match config.format {
                Format::Csv => {
                    let mut s = config.csv_preamble();
                    s.push_str("theta_hat,count\n");
                    for (t, c) in &report.histogram {
                        s.push_str(&format!("{},{c}\n", frame.format(*t)));
                    }
                    s
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        theta_hat: Box<RawValue>,
                        count: usize,
                    }
                    #[derive(Serialize)]
                    struct Body {
                        n_runs: usize,
                        rows: Vec<Row>,
                    }
                    let rows = report
                        .histogram
                        .iter()
                        .map(|(t, &count)| Row { theta_hat: time_json(frame, *t), count })
                        .collect();
                    json_doc(config, Body { n_runs: report.n_runs, rows })
                }
            };
            Ok(vec![Artifact::single(body)])
        }
    }
}
