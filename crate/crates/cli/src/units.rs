//! Exact conversion between decimal time strings and integer ticks.
//!
//! Model time is measured in seconds. A [`Frame`] fixes the tick size
//! (a power of ten per second) and the unit used for every time value a user
//! reads or writes.

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use leadlag::{Resolution, TimeStamp};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TimeUnit {
    #[value(alias = "s")]
    Seconds,
    #[value(alias = "ms")]
    Milliseconds,
    #[value(alias = "us")]
    Microseconds,
    #[value(alias = "ns")]
    Nanoseconds,
}

impl TimeUnit {
    fn per_second_exp(self) -> u32 {
        match self {
            TimeUnit::Seconds => 0,
            TimeUnit::Milliseconds => 3,
            TimeUnit::Microseconds => 6,
            TimeUnit::Nanoseconds => 9,
        }
    }
}

impl fmt::Display for TimeUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TimeUnit::Seconds => "seconds",
            TimeUnit::Milliseconds => "milliseconds",
            TimeUnit::Microseconds => "microseconds",
            TimeUnit::Nanoseconds => "nanoseconds",
        };
        f.write_str(s)
    }
}

/// Tick size and display unit shared by one command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    pub time_unit: TimeUnit,
    pub ticks_per_second: i64,
}

impl Frame {
    pub fn new(time_unit: TimeUnit, ticks_per_second: i64) -> Result<Self> {
        let frame = Frame { time_unit, ticks_per_second };
        frame.tick_exp()?;
        Ok(frame)
    }

    fn tick_exp(&self) -> Result<u32> {
        let mut n = self.ticks_per_second;
        let mut e = 0;
        while n > 1 && n % 10 == 0 {
            n /= 10;
            e += 1;
        }
        if n != 1 || e > 12 {
            return Err(CliError::InvalidArgument(format!(
                "ticks per second must be a power of ten up to 10^12, got {}",
                self.ticks_per_second
            )));
        }
        Ok(e)
    }

    pub fn resolution(&self) -> Resolution {
        Resolution::new(self.ticks_per_second)
    }

    /// Parses a plain decimal (`-12.0345`) in the frame's unit, exactly.
    pub fn parse(&self, s: &str) -> Result<TimeStamp> {
        let text = s.trim();
        let dec: Decimal =
            text.parse().map_err(|_| CliError::InvalidArgument(format!("'{text}' is not a decimal time")))?;
        // ticks = mantissa · 10^(tick_exp − unit_exp − scale)
        let e = self.tick_exp()? as i64 - self.time_unit.per_second_exp() as i64 - dec.scale as i64;
        let overflow = || CliError::TimeOverflow(text.to_string());
        let ticks = if e >= 0 {
            10i128.checked_pow(e as u32).and_then(|p| dec.mantissa.checked_mul(p)).ok_or_else(overflow)?
        } else {
            let p = 10i128.checked_pow((-e) as u32);
            match p {
                Some(p) if dec.mantissa % p == 0 => dec.mantissa / p,
                _ if dec.mantissa == 0 => 0,
                _ => {
                    return Err(CliError::TimePrecision {
                        value: text.to_string(),
                        ticks_per_second: self.ticks_per_second,
                    })
                }
            }
        };
        i64::try_from(ticks).map(TimeStamp).map_err(|_| overflow())
    }

    /// Exact decimal in the frame's unit, with as many fractional digits as
    /// one tick needs.
    pub fn format(&self, t: TimeStamp) -> String {
        let tick_exp = self.tick_exp().expect("frame validated at construction");
        let unit_exp = self.time_unit.per_second_exp();
        let v = t.ticks() as i128;
        if unit_exp >= tick_exp {
            return (v * 10i128.pow(unit_exp - tick_exp)).to_string();
        }
        let digits = (tick_exp - unit_exp) as usize;
        let q = 10i128.pow(digits as u32);
        let sign = if v < 0 { "-" } else { "" };
        let a = v.abs();
        format!("{sign}{}.{:0digits$}", a / q, a % q)
    }
}

/// A decimal literal as `mantissa · 10^(−scale)`.
struct Decimal {
    mantissa: i128,
    scale: u32,
}

impl FromStr for Decimal {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        let (neg, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(());
        }
        if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(());
        }
        let frac = frac.trim_end_matches('0');
        let mut mantissa: i128 = 0;
        for b in int.bytes().chain(frac.bytes()) {
            mantissa = mantissa.checked_mul(10).and_then(|m| m.checked_add((b - b'0') as i128)).ok_or(())?;
        }
        let scale = u32::try_from(frac.len()).map_err(|_| ())?;
        Ok(Decimal { mantissa: if neg { -mantissa } else { mantissa }, scale })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn micro(unit: TimeUnit) -> Frame {
        Frame::new(unit, 1_000_000).unwrap()
    }

    #[test]
    fn parses_exact_decimals() {
        let f = micro(TimeUnit::Seconds);
        assert_eq!(f.parse("0.001").unwrap(), TimeStamp(1_000));
        assert_eq!(f.parse("-2.5").unwrap(), TimeStamp(-2_500_000));
        assert_eq!(f.parse("3").unwrap(), TimeStamp(3_000_000));
        assert_eq!(f.parse(".25").unwrap(), TimeStamp(250_000));
        assert_eq!(f.parse("0.000001000").unwrap(), TimeStamp(1));
        assert_eq!(micro(TimeUnit::Milliseconds).parse("0.002").unwrap(), TimeStamp(2));
        assert_eq!(micro(TimeUnit::Nanoseconds).parse("5000").unwrap(), TimeStamp(5));
    }

    #[test]
    fn rejects_sub_tick_and_garbage() {
        let f = micro(TimeUnit::Seconds);
        assert!(matches!(f.parse("0.0000001"), Err(CliError::TimePrecision { .. })));
        assert!(matches!(micro(TimeUnit::Nanoseconds).parse("1"), Err(CliError::TimePrecision { .. })));
        assert!(matches!(f.parse("1e3"), Err(CliError::InvalidArgument(_))));
        assert!(matches!(f.parse("."), Err(CliError::InvalidArgument(_))));
        assert!(matches!(f.parse("99999999999999"), Err(CliError::TimeOverflow(_))));
    }

    #[test]
    fn format_round_trips() {
        for unit in [TimeUnit::Seconds, TimeUnit::Milliseconds, TimeUnit::Microseconds, TimeUnit::Nanoseconds] {
            let f = micro(unit);
            for t in [0, 1, -1, 999, 100_000, -123_456_789, 7_000_000_000] {
                let s = f.format(TimeStamp(t));
                assert_eq!(f.parse(&s).unwrap(), TimeStamp(t), "{unit} {s}");
            }
        }
        assert_eq!(micro(TimeUnit::Seconds).format(TimeStamp(100_000)), "0.100000");
        assert_eq!(micro(TimeUnit::Seconds).format(TimeStamp(-1)), "-0.000001");
        assert_eq!(micro(TimeUnit::Milliseconds).format(TimeStamp(1_500)), "1.500");
        assert_eq!(micro(TimeUnit::Nanoseconds).format(TimeStamp(2)), "2000");
    }

    #[test]
    fn frame_needs_power_of_ten() {
        assert!(Frame::new(TimeUnit::Seconds, 1000).is_ok());
        assert!(Frame::new(TimeUnit::Seconds, 1).is_ok());
        assert!(Frame::new(TimeUnit::Seconds, 250).is_err());
        assert!(Frame::new(TimeUnit::Seconds, 0).is_err());
    }
}
