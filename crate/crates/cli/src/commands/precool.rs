use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use cqnc_core::params::{preset, thermal_occupancy};
use cqnc_core::precool::{
    appendix_precool_params, collective_raman_coupling, n_min, optical_damping, CoolingResult,
    CouplingMode,
};
use serde::Serialize;

use crate::error::CliError;
use crate::output::{writer_for, Format};
use crate::units::parse_freq;
use crate::ParamSource;

#[derive(Args, Debug)]
pub struct PrecoolArgs {
    /// Parameter source; defaults to the built-in cooling operating point
    #[command(flatten)]
    pub source: ParamSource,
    /// Excited-state linewidth override (suffixes: hz, rad; prefix 2pi*)
    #[arg(long)]
    pub gamma_e: Option<String>,
    /// Input laser power in W
    #[arg(long)]
    pub power: Option<f64>,
    /// Bath temperature in K for the occupancy
    #[arg(long, default_value_t = 300.0)]
    pub temperature: f64,
    /// Ground-state coherence decay in the EIT denominator (rad/s value)
    #[arg(long)]
    pub eit_coherence: Option<String>,
    /// Atom number
    #[arg(long)]
    pub atoms: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Serialize)]
struct ModeReport {
    coupling_mode: &'static str,
    coupling_rad_s: f64,
    cooling_rate_rad_s: f64,
    heating_rate_rad_s: f64,
    gamma_opt_rad_s: f64,
    gamma_opt_over_omega_m: f64,
    heating_regime: bool,
    n_min: f64,
}

#[derive(Serialize)]
struct PrecoolReport {
    schema_version: u32,
    temperature_k: f64,
    n_thermal: f64,
    d_ss_re: f64,
    d_ss_im: f64,
    d_ss_abs: f64,
    chi_eit_center_re: f64,
    chi_eit_center_im: f64,
    chi_eit_plus_abs: f64,
    chi_eit_minus_abs: f64,
    modes: Vec<ModeReport>,
}

pub fn run(args: &PrecoolArgs) -> Result<(), CliError> {
    let (sys, _) = match (&args.source.preset, &args.source.config) {
        (None, None) => preset("appendix")?,
        _ => args.source.load()?,
    };
    let mut pre = appendix_precool_params(&sys);
    if let Some(ge) = &args.gamma_e {
        let gamma_e = parse_freq(ge, Some(sys.omega_m))?;
        // The control drive and detuning are specified in units of the
        // linewidth; keep them pinned at 50 gamma_e.
        pre.gamma_e = gamma_e;
        pre.control_rabi = 50.0 * gamma_e;
        pre.single_photon_detuning = 50.0 * gamma_e;
    }
    if let Some(p) = args.power {
        pre.power = p;
    }
    if let Some(gc) = &args.eit_coherence {
        pre.gamma_coherence = parse_freq(gc, Some(sys.omega_m))?;
    }
    if let Some(n) = args.atoms {
        pre.atom_count = n;
    }
    pre.validate()?;

    let n_th = thermal_occupancy(args.temperature, sys.omega_m).bose_einstein;
    let chi_center = cqnc_core::precool::chi_eit(
        cqnc_core::precool::Sideband::Center,
        &pre,
        sys.omega_m,
    );

    let mut modes = Vec::new();
    let mut reference: Option<CoolingResult> = None;
    for mode in [CouplingMode::Optomechanical, CouplingMode::AsWritten] {
        let mut at = pre;
        at.coupling_mode = mode;
        let cooling = optical_damping(&at, &sys);
        let coupling = match mode {
            CouplingMode::AsWritten => collective_raman_coupling(&at),
            CouplingMode::Optomechanical => sys.g0,
        };
        modes.push(ModeReport {
            coupling_mode: mode.label(),
            coupling_rad_s: coupling,
            cooling_rate_rad_s: cooling.cooling_rate,
            heating_rate_rad_s: cooling.heating_rate,
            gamma_opt_rad_s: cooling.gamma_opt,
            gamma_opt_over_omega_m: cooling.gamma_opt / sys.omega_m,
            heating_regime: cooling.is_heating(),
            n_min: n_min(&cooling, sys.gamma_m, n_th),
        });
        reference.get_or_insert(cooling);
    }
    let cooling = reference.expect("two modes evaluated");

    let report = PrecoolReport {
        schema_version: crate::output::SCHEMA_VERSION,
        temperature_k: args.temperature,
        n_thermal: n_th,
        d_ss_re: cooling.d_ss.re,
        d_ss_im: cooling.d_ss.im,
        d_ss_abs: cooling.d_ss.norm(),
        chi_eit_center_re: chi_center.re,
        chi_eit_center_im: chi_center.im,
        chi_eit_plus_abs: cooling.chi_eit_plus.norm(),
        chi_eit_minus_abs: cooling.chi_eit_minus.norm(),
        modes,
    };

    let mut out = writer_for(args.output.as_ref())?;
    match args.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())?;
        }
        Format::Csv => {
            writeln!(out, "precool at T = {} K (n_th = {:.4e})", report.temperature_k, report.n_thermal)?;
            writeln!(
                out,
                "  <d>          = {:.4e} {:+.4e}i  (|<d>| = {:.4e})",
                report.d_ss_re, report.d_ss_im, report.d_ss_abs
            )?;
            writeln!(
                out,
                "  chi_EIT      = {:.4e} {:+.4e}i at carrier; |chi_+| = {:.4e}, |chi_-| = {:.4e}",
                report.chi_eit_center_re,
                report.chi_eit_center_im,
                report.chi_eit_plus_abs,
                report.chi_eit_minus_abs
            )?;
            for m in &report.modes {
                writeln!(
                    out,
                    "  [{}] coupling = {:.4e} rad/s: A- = {:.4e}, A+ = {:.4e}, Gamma_opt = {:.4e} rad/s ({:.3} omega_m), n_min = {:.4e}{}",
                    m.coupling_mode,
                    m.coupling_rad_s,
                    m.cooling_rate_rad_s,
                    m.heating_rate_rad_s,
                    m.gamma_opt_rad_s,
                    m.gamma_opt_over_omega_m,
                    m.n_min,
                    if m.heating_regime { "  ** heating regime **" } else { "" }
                )?;
            }
        }
    }
    out.flush()?;
    Ok(())
}
