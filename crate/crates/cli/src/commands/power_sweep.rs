use std::path::PathBuf;

use clap::Args;
use cqnc_core::optimum::{default_power_grid, power_sweep};
use rayon::prelude::*;

use crate::error::CliError;
use crate::output::{emit_rows, make_grid, Axis, Format, Row};
use crate::units::parse_freq;
use crate::{parse_schemes, workers, ParamSource};

#[derive(Args, Debug)]
pub struct PowerSweepArgs {
    #[command(flatten)]
    pub source: ParamSource,
    /// Evaluation frequency (suffixes: wm, hz, rad)
    #[arg(long, default_value = "1wm")]
    pub omega: String,
    #[arg(long, value_delimiter = ',', default_value = "standard,resonant-cqnc,heterodyne-cqnc")]
    pub scheme: Vec<String>,
    /// Sweep start in W (default: 8 log decades centered on the standard
    /// optimum)
    #[arg(long)]
    pub from: Option<f64>,
    /// Sweep stop in W
    #[arg(long, requires = "from")]
    pub to: Option<f64>,
    #[arg(short = 'n', long, default_value_t = 201)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

pub fn run(args: &PowerSweepArgs) -> Result<(), CliError> {
    let (params, _) = args.source.load()?;
    let omega = parse_freq(&args.omega, Some(params.omega_m))?;
    let schemes = parse_schemes(&args.scheme)?;

    let grid = match (args.from, args.to) {
        (Some(from), Some(to)) => make_grid(from, to, args.points, true)?,
        (None, None) => default_power_grid(omega, &params, 8.0, args.points)?,
        _ => return Err(CliError::Usage("--from and --to go together".into())),
    };

    // The closed-form evaluation is cheap; parallelize over schemes only to
    // keep the per-scheme monotone structure contiguous.
    let pool = workers::thread_pool()?;
    let per_scheme = pool.install(|| {
        schemes
            .par_iter()
            .map(|&scheme| {
                power_sweep(omega, &params, scheme, &grid).map(|points| (scheme, points))
            })
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut rows = Vec::with_capacity(schemes.len() * grid.len());
    for (scheme, points) in per_scheme {
        for pt in points {
            rows.push(Row::from_budget(
                Axis::Power,
                pt.power,
                scheme.label(),
                &pt.budget,
                None,
            ));
        }
    }
    emit_rows(&rows, Axis::Power, false, args.format, args.output.as_ref())
}
