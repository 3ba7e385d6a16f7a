//! Command-line front end for the `leadlag` estimator.
//!
//! Each subcommand resolves its flags into a [`RunConfig`], runs it, and
//! writes CSV or JSON artifacts that embed that config. `leadlag replay`
//! reads the embedded config back and rebuilds the artifact byte for byte.

pub mod args;
pub mod config;
mod error;
pub mod exec;
pub mod ticks;
pub mod units;

use std::fs;
use std::io::Write;
use std::path::Path;

pub use args::{Cli, Command};
pub use config::{Format, RunConfig};
pub use error::{CliError, Result};
pub use exec::{execute, Artifact};
pub use ticks::{ingest, render_ticks, Column, TickFileSpec};
pub use units::{Frame, TimeUnit};

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> Result<()> {
    let config = match args::resolve(&cli.command)? {
        Some(c) => c,
        None => {
            let Command::Replay(a) = &cli.command else { unreachable!() };
            let text = fs::read_to_string(&a.artifact).map_err(|e| CliError::io(&a.artifact, e))?;
            RunConfig::from_artifact(&a.artifact, &text)?
        }
    };
    let artifacts = execute(&config)?;
    write_artifacts(&artifacts, config.format, args::output_of(&cli.command).map(|p| p.as_path()))
}

/// Writes a single artifact to `out` (or standard output), or several into
/// the directory `out` as `<name>.<ext>`.
pub fn write_artifacts(artifacts: &[Artifact], format: Format, out: Option<&Path>) -> Result<()> {
    match (artifacts, out) {
        ([one], None) if one.name.is_none() => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(one.body.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
        }
        ([one], Some(path)) if one.name.is_none() => fs::write(path, &one.body).map_err(|e| CliError::io(path, e)),
        (_, None) => Err(CliError::InvalidArgument("--out <DIR> is required for multi-file output".into())),
        (many, Some(dir)) => {
            fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
            for a in many {
                let path = dir.join(format!("{}.{}", a.name.unwrap_or("out"), format.extension()));
                fs::write(&path, &a.body).map_err(|e| CliError::io(&path, e))?;
            }
            Ok(())
        }
    }
}
