//! Command-line front end for the dual-cavity force-sensing noise
//! calculator: presets and parameter files, frequency and power sweeps,
//! anchor-reproduction runs, the precooling calculator and the validation
//! suite. CSV/JSON only; plotting stays downstream.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod units;
pub mod workers;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use cqnc_core::params::{FrequencyLayout, Scheme, SystemParams};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "cqnc",
    version,
    about = "Quantum-limited force sensing in a dual-cavity atom-optomechanical system"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Added-force-noise budget over a frequency grid
    Spectrum(commands::spectrum::SpectrumArgs),
    /// Added-force-noise budget over a driving-power grid at fixed frequency
    PowerSweep(commands::power_sweep::PowerSweepArgs),
    /// Standard quantum limit across frequency
    Sql(commands::sql::SqlArgs),
    /// Regenerate an anchor data set and check its reference values
    Reproduce(commands::reproduce::ReproduceArgs),
    /// EIT precooling: steady-state amplitude, damping rate, phonon number
    Precool(commands::precool::PrecoolArgs),
    /// Run the invariant suite and emit a machine-readable report
    Validate(commands::validate::ValidateArgs),
}

/// Where the system parameters come from.
#[derive(Args, Debug, Clone)]
pub struct ParamSource {
    /// Named parameter set: fig2, fig3 or appendix
    #[arg(long, conflicts_with = "config")]
    pub preset: Option<String>,
    /// Flat key-value parameter file
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl ParamSource {
    pub fn load(&self) -> Result<(SystemParams, FrequencyLayout), CliError> {
        match (&self.preset, &self.config) {
            (Some(name), None) => Ok(cqnc_core::params::preset(name)?),
            (None, Some(path)) => config::load_config(path),
            (None, None) => Err(CliError::Usage(
                "provide a parameter source: --preset <name> or --config <file>".into(),
            )),
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        }
    }
}

pub fn parse_schemes(names: &[String]) -> Result<Vec<Scheme>, CliError> {
    let mut schemes = Vec::new();
    for name in names {
        let scheme = match name.trim().to_ascii_lowercase().as_str() {
            "standard" => Scheme::Standard,
            "resonant-cqnc" | "resonant" => Scheme::ResonantCqnc,
            "heterodyne-cqnc" | "heterodyne" | "cqnc" => Scheme::HeterodyneCqnc,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown scheme `{other}` (expected standard, resonant-cqnc or heterodyne-cqnc)"
                )))
            }
        };
        if !schemes.contains(&scheme) {
            schemes.push(scheme);
        }
    }
    if schemes.is_empty() {
        return Err(CliError::Usage("no scheme selected".into()));
    }
    Ok(schemes)
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum(args) => commands::spectrum::run(&args),
        Command::PowerSweep(args) => commands::power_sweep::run(&args),
        Command::Sql(args) => commands::sql::run(&args),
        Command::Reproduce(args) => commands::reproduce::run(&args),
        Command::Precool(args) => commands::precool::run(&args),
        Command::Validate(args) => commands::validate::run(&args),
    }
}
