//! Minimization of the added noise over the measurement strength g and
//! driving-power sweeps.
//!
//! The optimization is carried out at T = 0; the thermal term is additive
//! and g-independent, so it shifts every curve without moving the optimum.
//! It is reported separately in [`OptimumResult::thermal`].

use alloc::vec::Vec;

use crate::params::{g_to_power, power_to_g, thermal_occupancy, Scheme, SystemParams};
use crate::spectra::{s_cqnc_limit, s_sql, shot_bracket, spectrum_closed_form, NoiseBudget};
use crate::{Error, Result};

/// Location of a noise minimum in measurement strength.
///
/// The cancelled-backaction spectrum is strictly decreasing in g, so its
/// optimum is an asymptote rather than a finite coupling; representing that
/// explicitly avoids fake huge finite values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OptimalCoupling {
    Finite(f64),
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimumResult {
    pub omega: f64,
    pub scheme: Scheme,
    pub g_opt: OptimalCoupling,
    /// Quantum part of the minimum (T = 0), including the asymptotic floor
    /// for the CQNC schemes.
    pub s_min: f64,
    /// Additive thermal term k_BT/(ħω_m) from the configured temperature.
    pub thermal: f64,
    /// For asymptotic optima: smallest g whose spectrum is within the
    /// requested tolerance of `s_min`.
    pub g_99: Option<f64>,
    /// Driving power for `g_opt` (finite optimum) or for `g_99`
    /// (asymptotic), when the power conversion is defined.
    pub power_opt: Option<f64>,
}

fn power_for(g: f64, p: &SystemParams) -> Option<f64> {
    if p.g0 > 0.0 && p.omega_laser > 0.0 {
        g_to_power(g, p).ok()
    } else {
        None
    }
}

/// Closed-form optimum of the standard scheme: g_opt² = κ/(4|χ_m(ω)|) and
/// s_min = 1/(γ_m|χ_m|), the standard quantum limit.
pub fn optimal_g_standard(omega: f64, p: &SystemParams) -> Result<OptimumResult> {
    let p = Scheme::Standard.mask(p);
    let det = p.omega_m * p.omega_m - omega * omega;
    let chi_m_abs = p.omega_m / libm::hypot(det, omega * p.gamma_m);
    let g_opt = libm::sqrt(p.kappa / (4.0 * chi_m_abs));
    Ok(OptimumResult {
        omega,
        scheme: Scheme::Standard,
        g_opt: OptimalCoupling::Finite(g_opt),
        s_min: s_sql(omega, &p),
        thermal: thermal_occupancy(p.temperature, p.omega_m).classical,
        g_99: None,
        power_opt: power_for(g_opt, &p),
    })
}

/// Asymptotic optimum of a CQNC scheme.
///
/// `s_min` is the T = 0 floor ½(1 + (ω² + Γ²/4)/ω_m²); `g_99` solves
/// shot(g) = tolerance·s_min so the spectrum at `g_99` sits at
/// (1 + tolerance)·s_min.
pub fn optimal_g_cqnc(
    omega: f64,
    p: &SystemParams,
    scheme: Scheme,
    tolerance: f64,
) -> Result<OptimumResult> {
    if scheme == Scheme::Standard {
        return Err(Error::InvalidParams {
            reason: "asymptotic optimum applies to the CQNC schemes only",
        });
    }
    if !(tolerance > 0.0 && tolerance <= 0.5) {
        return Err(Error::InvalidParams {
            reason: "tolerance must lie in (0, 0.5]",
        });
    }
    let p = scheme.mask(p);
    let floor = s_cqnc_limit(omega, &p);
    let det = p.omega_m * p.omega_m - omega * omega;
    let chi_m_abs = p.omega_m / libm::hypot(det, omega * p.gamma_m);
    let g99 = libm::sqrt(
        0.5 * (p.kappa / p.gamma_m) * shot_bracket(p.j, p.kappa)
            / (chi_m_abs * chi_m_abs * tolerance * floor),
    );
    Ok(OptimumResult {
        omega,
        scheme,
        g_opt: OptimalCoupling::Asymptotic,
        s_min: floor,
        thermal: thermal_occupancy(p.temperature, p.omega_m).classical,
        g_99: Some(g99),
        power_opt: power_for(g99, &p),
    })
}

/// One point of a driving-power sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerPoint {
    pub power: f64,
    pub g: f64,
    pub budget: NoiseBudget,
}

/// Evaluate the scheme's closed-form spectrum at T = 0 over a power grid.
/// The grid must be positive and strictly ascending.
pub fn power_sweep(
    omega: f64,
    p: &SystemParams,
    scheme: Scheme,
    powers: &[f64],
) -> Result<Vec<PowerPoint>> {
    let mut last = 0.0;
    for &pw in powers {
        if pw <= 0.0 || pw <= last {
            return Err(Error::InvalidParams {
                reason: "power grid must be positive and ascending",
            });
        }
        last = pw;
    }
    powers
        .iter()
        .map(|&power| {
            let mut at = *p;
            at.g = power_to_g(power, p)?;
            at.g_atom = at.g; // matched drive
            let budget = spectrum_closed_form(omega, &at, scheme, 0.0)?;
            Ok(PowerPoint {
                power,
                g: at.g,
                budget,
            })
        })
        .collect()
}

/// Log-spaced power grid spanning `decades` decades centered on the
/// standard-scheme optimum power at `omega`.
pub fn default_power_grid(
    omega: f64,
    p: &SystemParams,
    decades: f64,
    points: usize,
) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::InvalidParams {
            reason: "grid needs at least two points",
        });
    }
    let opt = optimal_g_standard(omega, p)?;
    let center = opt.power_opt.ok_or(Error::NonPositiveRate {
        name: "g0",
        value: p.g0,
    })?;
    let lo = libm::log10(center) - decades / 2.0;
    let step = decades / (points - 1) as f64;
    Ok((0..points)
        .map(|i| libm::pow(10.0, lo + step * i as f64))
        .collect())
}

/// Golden-section minimization of `f` over g ∈ [g_lo, g_hi], searched on a
/// logarithmic axis. Returns (argmin, min).
pub fn golden_section_log_min(
    f: impl Fn(f64) -> f64,
    g_lo: f64,
    g_hi: f64,
    max_evals: usize,
) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut a = libm::log(g_lo);
    let mut b = libm::log(g_hi);
    let eval = |u: f64| f(libm::exp(u));

    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = eval(x1);
    let mut f2 = eval(x2);
    let mut evals = 2;
    while evals < max_evals && (b - a) > 1e-14 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = eval(x2);
        }
        evals += 1;
    }
    if f1 < f2 {
        (libm::exp(x1), f1)
    } else {
        (libm::exp(x2), f2)
    }
}

/// Driving power beyond which the given CQNC scheme's closed-form spectrum
/// falls below the standard scheme's at the same power, found by bisection
/// in log power. Errors if no sign change exists on the bracket.
pub fn crossing_power(omega: f64, p: &SystemParams, scheme: Scheme) -> Result<f64> {
    if scheme == Scheme::Standard {
        return Err(Error::InvalidParams {
            reason: "crossing is defined against the standard scheme",
        });
    }
    let diff = |power: f64| -> Result<f64> {
        let mut at = *p;
        at.g = power_to_g(power, p)?;
        at.g_atom = at.g;
        let std = spectrum_closed_form(omega, &at, Scheme::Standard, 0.0)?;
        let cqnc = spectrum_closed_form(omega, &at, scheme, 0.0)?;
        Ok(std.total - cqnc.total)
    };

    let opt = optimal_g_standard(omega, p)?;
    let center = opt.power_opt.ok_or(Error::NonPositiveRate {
        name: "g0",
        value: p.g0,
    })?;

    // Bracket the sign change on a coarse log grid around the standard
    // optimum; the difference is monotone-increasing in power once the
    // standard backaction dominates.
    let mut lo = center * 1e-8;
    let mut hi = f64::NAN;
    let mut prev = diff(lo)?;
    for i in 1..=160 {
        let pw = center * libm::pow(10.0, -8.0 + i as f64 * 0.1);
        let d = diff(pw)?;
        if prev < 0.0 && d >= 0.0 {
            hi = pw;
            break;
        }
        lo = pw;
        prev = d;
    }
    if !hi.is_finite() {
        return Err(Error::InvalidParams {
            reason: "no crossing within the searched power range",
        });
    }
    for _ in 0..200 {
        let mid = libm::sqrt(lo * hi);
        if diff(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(libm::sqrt(lo * hi))
}
