//! Frequency/rate value parsing.
//!
//! Everything internal is angular (rad/s). Accepted spellings:
//! `1.5e6` or `1.5e6rad` (rad/s as-is), `300e3hz` (multiplied by 2π),
//! `0.75wm` (multiples of the mechanical resonance), and the explicit
//! `2pi*300e3` prefix form.

use std::f64::consts::PI;

use crate::error::CliError;

/// Parse a frequency-like value. `omega_m` is needed only for the `wm`
/// suffix.
pub fn parse_freq(text: &str, omega_m: Option<f64>) -> Result<f64, CliError> {
    let s = text.trim();
    let lower = s.to_ascii_lowercase();

    if let Some(rest) = lower.strip_prefix("2pi*") {
        let value: f64 = rest
            .parse()
            .map_err(|_| bad_value(s, "expected a number after 2pi*"))?;
        return Ok(2.0 * PI * value);
    }

    if let Some(rest) = lower.strip_suffix("wm") {
        let factor: f64 = rest
            .parse()
            .map_err(|_| bad_value(s, "expected a number before wm"))?;
        let omega_m = omega_m.ok_or_else(|| {
            CliError::Usage(format!("`{s}`: wm units need a parameter set with omega_m"))
        })?;
        return Ok(factor * omega_m);
    }

    if let Some(rest) = lower.strip_suffix("hz") {
        let value: f64 = rest
            .parse()
            .map_err(|_| bad_value(s, "expected a number before hz"))?;
        return Ok(2.0 * PI * value);
    }

    if let Some(rest) = lower.strip_suffix("rad") {
        let value: f64 = rest
            .parse()
            .map_err(|_| bad_value(s, "expected a number before rad"))?;
        return Ok(value);
    }

    lower
        .parse()
        .map_err(|_| bad_value(s, "expected a number with optional wm/hz/rad suffix"))
}

fn bad_value(text: &str, hint: &str) -> CliError {
    CliError::Usage(format!("cannot parse `{text}`: {hint}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_and_suffixed_forms() {
        assert_eq!(parse_freq("1.5e6", None).unwrap(), 1.5e6);
        assert_eq!(parse_freq("1.5e6rad", None).unwrap(), 1.5e6);
        assert_eq!(parse_freq("100hz", None).unwrap(), 200.0 * PI);
        assert_eq!(parse_freq("2pi*100", None).unwrap(), 200.0 * PI);
        assert_eq!(parse_freq("0.5wm", Some(2e6)).unwrap(), 1e6);
        assert_eq!(parse_freq(" 2WM ", Some(1e3)).unwrap(), 2e3);
    }

    #[test]
    fn rejects_garbage_and_missing_context() {
        assert!(parse_freq("fast", None).is_err());
        assert!(parse_freq("1wm", None).is_err());
        assert!(parse_freq("2pi*wm", Some(1.0)).is_err());
    }
}
