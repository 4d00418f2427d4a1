use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use cqnc_core::spectra::s_sql;

use crate::error::CliError;
use crate::output::{fmt_g9, make_grid, writer_for, Format};
use crate::units::parse_freq;
use crate::ParamSource;

#[derive(Args, Debug)]
pub struct SqlArgs {
    #[command(flatten)]
    pub source: ParamSource,
    /// Single evaluation frequency; mutually exclusive with a sweep
    #[arg(long, conflicts_with_all = ["from", "to"])]
    pub at: Option<String>,
    #[arg(long, default_value = "0.5wm")]
    pub from: String,
    #[arg(long, default_value = "1.5wm")]
    pub to: String,
    #[arg(short = 'n', long, default_value_t = 201)]
    pub points: usize,
    #[arg(long)]
    pub log: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

pub fn run(args: &SqlArgs) -> Result<(), CliError> {
    let (params, _) = args.source.load()?;
    let grid = match &args.at {
        Some(at) => vec![parse_freq(at, Some(params.omega_m))?],
        None => {
            let from = parse_freq(&args.from, Some(params.omega_m))?;
            let to = parse_freq(&args.to, Some(params.omega_m))?;
            make_grid(from, to, args.points, args.log)?
        }
    };

    let mut out = writer_for(args.output.as_ref())?;
    match args.format {
        Format::Csv => {
            writeln!(out, "omega_rad_s,sql")?;
            for &omega in &grid {
                writeln!(out, "{},{}", fmt_g9(omega), fmt_g9(s_sql(omega, &params)))?;
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = grid
                .iter()
                .map(|&omega| {
                    serde_json::json!({
                        "omega_rad_s": omega,
                        "sql": s_sql(omega, &params),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "schema_version": crate::output::SCHEMA_VERSION,
                "rows": rows,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())?;
        }
    }
    out.flush()?;
    Ok(())
}
