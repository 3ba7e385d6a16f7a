//! Tick CSV files: reading them into series and writing series back out.

use std::fmt;
use std::fs::File;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use leadlag::{TickSeries, TimeStamp};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::units::Frame;

/// A column picked by header name or by zero-based position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Column {
    Index(usize),
    Name(String),
}

impl FromStr for Column {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s.parse() {
            Ok(i) => Column::Index(i),
            Err(_) => Column::Name(s.to_string()),
        })
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Column::Index(i) => write!(f, "{i}"),
            Column::Name(n) => f.write_str(n),
        }
    }
}

/// Where a tick file is and how to read it. Times are in the command's
/// [`Frame`] unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TickFileSpec {
    pub path: PathBuf,
    pub time_column: Column,
    pub price_column: Column,
    pub delimiter: char,
    pub header: bool,
}

impl TickFileSpec {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        TickFileSpec {
            path: path.into(),
            time_column: Column::Index(0),
            price_column: Column::Index(1),
            delimiter: ',',
            header: true,
        }
    }
}

fn resolve(col: &Column, headers: Option<&csv::StringRecord>, path: &Path) -> Result<usize> {
    match col {
        Column::Index(i) => Ok(*i),
        Column::Name(name) => headers.and_then(|h| h.iter().position(|c| c == name)).ok_or_else(|| CliError::Parse {
            path: path.to_path_buf(),
            row: 1,
            msg: format!("no column named '{name}'"),
        }),
    }
}

/// Reads a tick file. Lines starting with `#` are skipped. Rows must be
/// strictly increasing in time; the first offending row is reported by its
/// line number in the file.
pub fn ingest(spec: &TickFileSpec, frame: &Frame) -> Result<TickSeries> {
    let path = spec.path.as_path();
    if !spec.delimiter.is_ascii() {
        return Err(CliError::InvalidArgument(format!("delimiter '{}' is not ASCII", spec.delimiter)));
    }
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(spec.delimiter as u8)
        .has_headers(spec.header)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(file);
    let parse_err = |row: u64, msg: String| CliError::Parse { path: path.to_path_buf(), row, msg };

    let headers = if spec.header {
        Some(reader.headers().map_err(|e| parse_err(line_of(&e), e.to_string()))?.clone())
    } else {
        None
    };
    let tc = resolve(&spec.time_column, headers.as_ref(), path)?;
    let pc = resolve(&spec.price_column, headers.as_ref(), path)?;

    let mut times: Vec<TimeStamp> = Vec::new();
    let mut prices = Vec::new();
    let mut record = csv::StringRecord::new();
    loop {
        match reader.read_record(&mut record) {
            Ok(false) => break,
            Ok(true) => {}
            Err(e) => return Err(parse_err(line_of(&e), e.to_string())),
        }
        let row = record.position().map_or(0, |p| p.line());
        let field =
            |c: usize, what: &str| record.get(c).ok_or_else(|| parse_err(row, format!("missing {what} column {c}")));
        let t = frame.parse(field(tc, "time")?).map_err(|e| match e {
            CliError::InvalidArgument(msg) => parse_err(row, msg),
            other => other,
        })?;
        let raw = field(pc, "price")?;
        let p: f64 = raw.parse().map_err(|_| parse_err(row, format!("'{raw}' is not a number")))?;
        if !p.is_finite() {
            return Err(parse_err(row, format!("price '{raw}' is not finite")));
        }
        if let Some(&last) = times.last() {
            if t == last {
                return Err(CliError::DuplicateTime { path: path.to_path_buf(), row });
            }
            if t < last {
                return Err(CliError::UnsortedTime { path: path.to_path_buf(), row });
            }
        }
        times.push(t);
        prices.push(p);
    }
    if times.is_empty() {
        return Err(CliError::EmptyInput { path: path.to_path_buf() });
    }
    let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(TickSeries::new(label, frame.resolution(), times, prices)?)
}

fn line_of(e: &csv::Error) -> u64 {
    e.position().map_or(0, |p| p.line())
}

/// Renders a series as `time,price` rows. Prices use the shortest decimal
/// that parses back to the same `f64`.
pub fn render_ticks(series: &TickSeries, frame: &Frame, preamble: &str) -> String {
    let mut out = String::with_capacity(preamble.len() + 24 * series.len());
    out.push_str(preamble);
    out.push_str("time,price\n");
    for (t, p) in series.times().iter().zip(series.prices()) {
        out.push_str(&frame.format(*t));
        out.push(',');
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}
