use std::path::PathBuf;

use clap::Args;
use cqnc_core::langevin::{oracle_spectrum, ThermalNoise};
use cqnc_core::params::{power_to_g, Scheme};
use cqnc_core::spectra::spectrum_general;
use rayon::prelude::*;

use crate::error::CliError;
use crate::output::{emit_rows, make_grid, Axis, Format, Row};
use crate::units::parse_freq;
use crate::{parse_schemes, workers, ParamSource};

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub source: ParamSource,
    /// Schemes, comma separated: standard, resonant-cqnc, heterodyne-cqnc
    #[arg(long, value_delimiter = ',', default_value = "standard,heterodyne-cqnc")]
    pub scheme: Vec<String>,
    /// Sweep start (suffixes: wm, hz, rad; prefix 2pi*)
    #[arg(long, default_value = "0.5wm")]
    pub from: String,
    /// Sweep stop
    #[arg(long, default_value = "1.5wm")]
    pub to: String,
    #[arg(short = 'n', long, default_value_t = 201)]
    pub points: usize,
    /// Log-spaced frequency grid
    #[arg(long)]
    pub log: bool,
    /// Bath temperature in K (overrides the parameter set)
    #[arg(long)]
    pub temperature: Option<f64>,
    /// Coupling g override (rad/s value, suffixes allowed); G follows g
    /// unless --g-atom is given
    #[arg(long)]
    pub g: Option<String>,
    /// Atomic coupling G override
    #[arg(long)]
    pub g_atom: Option<String>,
    /// Driving power in W; sets g through the drive relation
    #[arg(long, conflicts_with = "g")]
    pub power: Option<f64>,
    /// Add brute-force Langevin columns oracle_total and rel_dev
    #[arg(long)]
    pub oracle: bool,
    /// Thermal-force model of the oracle: paper (classical, zero at T = 0)
    /// or symmetrized (n + 1/2)
    #[arg(long, value_enum, default_value_t = ThermalArg::Paper)]
    pub thermal_mode: ThermalArg,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ThermalArg {
    Paper,
    Symmetrized,
}

impl From<ThermalArg> for ThermalNoise {
    fn from(arg: ThermalArg) -> Self {
        match arg {
            ThermalArg::Paper => ThermalNoise::PaperConsistent,
            ThermalArg::Symmetrized => ThermalNoise::Symmetrized,
        }
    }
}

pub fn run(args: &SpectrumArgs) -> Result<(), CliError> {
    let (mut params, _) = args.source.load()?;
    if let Some(t) = args.temperature {
        params.temperature = t;
    }
    if let Some(power) = args.power {
        params.g = power_to_g(power, &params)?;
        params.g_atom = params.g;
    }
    if let Some(g) = &args.g {
        params.g = parse_freq(g, Some(params.omega_m))?;
        params.g_atom = params.g;
    }
    if let Some(g_atom) = &args.g_atom {
        params.g_atom = parse_freq(g_atom, Some(params.omega_m))?;
    }

    let schemes = parse_schemes(&args.scheme)?;
    let from = parse_freq(&args.from, Some(params.omega_m))?;
    let to = parse_freq(&args.to, Some(params.omega_m))?;
    let grid = make_grid(from, to, args.points, args.log)?;
    let thermal: ThermalNoise = args.thermal_mode.into();
    let temperature = params.temperature;

    let pool = workers::thread_pool()?;
    let mut rows = Vec::with_capacity(schemes.len() * grid.len());
    for scheme in schemes {
        let mut scheme_rows = pool.install(|| {
            grid.par_iter()
                .map(|&omega| -> Result<Row, CliError> {
                    let budget = spectrum_general(omega, &params, scheme, temperature)?;
                    let oracle = if args.oracle {
                        Some(oracle_spectrum(omega, &params, scheme, temperature, thermal)?.total)
                    } else {
                        None
                    };
                    Ok(Row::from_budget(
                        Axis::Frequency,
                        omega,
                        scheme.label(),
                        &budget,
                        oracle,
                    ))
                })
                .collect::<Result<Vec<_>, _>>()
        })?;
        rows.append(&mut scheme_rows);
    }

    emit_rows(&rows, Axis::Frequency, args.oracle, args.format, args.output.as_ref())
}

// Re-export for sibling commands that take a scheme argument.
pub(crate) fn scheme_of(name: &str) -> Result<Scheme, CliError> {
    Ok(parse_schemes(&[name.to_string()])?[0])
}
