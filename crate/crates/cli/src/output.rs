//! CSV and JSON emission.
//!
//! CSV numbers carry 9 significant digits in scientific notation with a `.`
//! decimal separator, independent of locale; identical inputs produce
//! byte-identical output.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use cqnc_core::spectra::NoiseBudget;
use serde::Serialize;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// 9 significant digits, scientific.
pub fn fmt_g9(x: f64) -> String {
    format!("{x:.8e}")
}

pub fn writer_for(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|err| {
            CliError::Config(format!("cannot create `{}`: {err}", p.display()))
        })?)),
        None => Box::new(io::stdout().lock()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One sweep row; both sweep axes share the layout, with either the
/// frequency or the power column populated.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_rad_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_w: Option<f64>,
    pub scheme: &'static str,
    pub total: f64,
    pub thermal: f64,
    pub shot: f64,
    pub backaction: f64,
    pub atomic: f64,
    pub normalization: Option<f64>,
    pub beyond_band: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_total: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_dev: Option<f64>,
}

impl Row {
    pub fn from_budget(
        axis: Axis,
        at: f64,
        scheme: &'static str,
        budget: &NoiseBudget,
        oracle_total: Option<f64>,
    ) -> Self {
        let (omega_rad_s, power_w) = match axis {
            Axis::Frequency => (Some(at), None),
            Axis::Power => (None, Some(at)),
        };
        Row {
            omega_rad_s,
            power_w,
            scheme,
            total: budget.total,
            thermal: budget.thermal,
            shot: budget.shot,
            backaction: budget.backaction,
            atomic: budget.atomic,
            normalization: budget.normalization,
            beyond_band: budget.beyond_band,
            oracle_total,
            rel_dev: oracle_total.map(|o| (budget.total - o) / o),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Frequency,
    Power,
}

impl Axis {
    fn column(&self) -> &'static str {
        match self {
            Axis::Frequency => "omega_rad_s",
            Axis::Power => "power_W",
        }
    }
}

#[derive(Serialize)]
struct SweepDoc<'a> {
    schema_version: u32,
    rows: &'a [Row],
}

pub fn emit_rows(
    rows: &[Row],
    axis: Axis,
    with_oracle: bool,
    format: Format,
    path: Option<&PathBuf>,
) -> Result<(), CliError> {
    let mut out = writer_for(path)?;
    match format {
        Format::Csv => {
            let mut header = format!(
                "{},scheme,total,thermal,shot,backaction,atomic",
                axis.column()
            );
            if with_oracle {
                header.push_str(",oracle_total,rel_dev");
            }
            writeln!(out, "{header}")?;
            for row in rows {
                let at = row.omega_rad_s.or(row.power_w).unwrap_or(f64::NAN);
                write!(
                    out,
                    "{},{},{},{},{},{},{}",
                    fmt_g9(at),
                    row.scheme,
                    fmt_g9(row.total),
                    fmt_g9(row.thermal),
                    fmt_g9(row.shot),
                    fmt_g9(row.backaction),
                    fmt_g9(row.atomic),
                )?;
                if with_oracle {
                    write!(
                        out,
                        ",{},{}",
                        fmt_g9(row.oracle_total.unwrap_or(f64::NAN)),
                        fmt_g9(row.rel_dev.unwrap_or(f64::NAN)),
                    )?;
                }
                writeln!(out)?;
            }
        }
        Format::Json => {
            let doc = SweepDoc {
                schema_version: SCHEMA_VERSION,
                rows,
            };
            serde_json::to_writer_pretty(&mut out, &doc)
                .map_err(|err| CliError::Io(io::Error::other(err)))?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Linear or log-spaced sweep grid.
pub fn make_grid(start: f64, stop: f64, points: usize, log: bool) -> Result<Vec<f64>, CliError> {
    if points < 2 {
        return Err(CliError::Usage("a sweep needs at least 2 points".into()));
    }
    if !(start < stop) {
        return Err(CliError::Usage(format!(
            "sweep start {start:e} must lie below stop {stop:e}"
        )));
    }
    if log && start <= 0.0 {
        return Err(CliError::Usage(
            "log spacing requires a positive start".into(),
        ));
    }
    let n = points as f64 - 1.0;
    Ok((0..points)
        .map(|i| {
            let t = i as f64 / n;
            if log {
                start * (stop / start).powf(t)
            } else {
                start + (stop - start) * t
            }
        })
        .collect())
}
