//! Flat key-value parameter files.
//!
//! One `key = value` pair per line, `#` comments, UTF-8. Keys are the
//! parameter names `omega_m, gamma_m, Q, Gamma, kappa, J, g, G, g0,
//! omega_L, T, m`; values are SI (rad/s, K, kg). Every rate/frequency key
//! also accepts a `_hz` variant whose value is multiplied by 2π. Unknown or
//! duplicate keys are errors.

use std::collections::HashSet;
use std::f64::consts::PI;
use std::path::Path;

use cqnc_core::params::{validate, FrequencyLayout, RawParams, SystemParams};

use crate::error::CliError;

const ANGULAR_KEYS: [&str; 9] = [
    "omega_m", "gamma_m", "Gamma", "kappa", "J", "g", "G", "g0", "omega_L",
];
const PLAIN_KEYS: [&str; 3] = ["Q", "T", "m"];

/// Load, parse and validate a parameter file. The returned layout places the
/// pump on the antisymmetric mode (ω_cav = ω_L + J) with the control field
/// at the sensing resonance ω_c.
pub fn load_config(path: &Path) -> Result<(SystemParams, FrequencyLayout), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::Config(format!("cannot read `{}`: {err}", path.display())))?;
    let raw = parse_config(&text)
        .map_err(|msg| CliError::Config(format!("{}: {msg}", path.display())))?;
    let params = validate(&raw)?;
    let layout = FrequencyLayout::new(
        params.omega_laser + params.j,
        params.j,
        params.omega_laser + 2.0 * params.j,
    );
    Ok((params, layout))
}

fn parse_config(text: &str) -> Result<RawParams, String> {
    let mut raw = RawParams::default();
    let mut seen: HashSet<String> = HashSet::new();

    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected `key = value`", lineno + 1))?;
        let key = key.trim();
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| format!("line {}: `{}` is not a number", lineno + 1, value.trim()))?;

        let (base, factor) = match key.strip_suffix("_hz") {
            Some(base) if ANGULAR_KEYS.contains(&base) => (base, 2.0 * PI),
            _ if ANGULAR_KEYS.contains(&key) || PLAIN_KEYS.contains(&key) => (key, 1.0),
            _ => return Err(format!("line {}: unknown key `{key}`", lineno + 1)),
        };
        if !seen.insert(base.to_string()) {
            return Err(format!("line {}: key `{base}` set twice", lineno + 1));
        }
        let value = value * factor;

        match base {
            "omega_m" => raw.omega_m = value,
            "gamma_m" => raw.gamma_m = Some(value),
            "Q" => raw.quality = Some(value),
            "Gamma" => raw.gamma_atom = Some(value),
            "kappa" => raw.kappa = value,
            "J" => raw.j = value,
            "g" => raw.g = value,
            "G" => raw.g_atom = value,
            "g0" => raw.g0 = value,
            "omega_L" => raw.omega_laser = value,
            "T" => raw.temperature = value,
            "m" => raw.mass = Some(value),
            _ => unreachable!(),
        }
    }
    Ok(raw)
}
