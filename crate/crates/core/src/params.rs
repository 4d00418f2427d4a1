//! Physical parameters of the sensing system, presets, and unit helpers.
//!
//! Every rate and frequency is angular (rad/s). Temperatures are Kelvin.
//! A single internal convention avoids factor-2π mistakes; front ends convert
//! Hz inputs on the way in.

use alloc::string::ToString;

use crate::{Error, Result};

/// Reduced Planck constant, J s (CODATA).
pub const HBAR: f64 = 1.054571817e-34;
/// Boltzmann constant, J/K (CODATA, exact).
pub const KB: f64 = 1.380649e-23;

/// Relative tolerance used when reconciling a supplied quality factor with a
/// supplied mechanical damping rate.
const Q_CONSISTENCY_REL: f64 = 1e-9;

/// All physical rates and frequencies of the sensing configuration.
///
/// `g` and `g_atom` are stored as nonnegative magnitudes: only their squares
/// enter any spectral density. `mass` is optional and needed only when
/// spectra are requested in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Mechanical resonance frequency ω_m, rad/s.
    pub omega_m: f64,
    /// Mechanical dissipation rate γ_m, rad/s.
    pub gamma_m: f64,
    /// Atomic coherence decay rate Γ, rad/s.
    pub gamma_atom: f64,
    /// Cavity decay rate κ (both cavities equal), rad/s.
    pub kappa: f64,
    /// Inter-cavity tunneling rate J, rad/s.
    pub j: f64,
    /// Drive-enhanced field-mechanics coupling g, rad/s.
    pub g: f64,
    /// Collective field-atom coupling G, rad/s.
    pub g_atom: f64,
    /// Single-photon optomechanical coupling g0, rad/s.
    pub g0: f64,
    /// Pump laser angular frequency ω_L, rad/s.
    pub omega_laser: f64,
    /// Bath temperature, K.
    pub temperature: f64,
    /// Effective mass of the mechanical mode, kg.
    pub mass: Option<f64>,
}

impl SystemParams {
    /// Mechanical quality factor Q = ω_m/γ_m.
    pub fn quality(&self) -> f64 {
        self.omega_m / self.gamma_m
    }
}

/// Unvalidated input parameters. `gamma_m` may be given directly or through
/// the quality factor; [`validate`] reconciles the two.
#[derive(Debug, Clone, Copy, Default)]
pub struct RawParams {
    pub omega_m: f64,
    pub gamma_m: Option<f64>,
    pub quality: Option<f64>,
    /// Defaults to γ_m (matched noise/antinoise dissipation) when absent.
    pub gamma_atom: Option<f64>,
    pub kappa: f64,
    pub j: f64,
    pub g: f64,
    pub g_atom: f64,
    pub g0: f64,
    pub omega_laser: f64,
    pub temperature: f64,
    pub mass: Option<f64>,
}

/// Check all parameter invariants and normalize into a [`SystemParams`].
///
/// Fills γ_m from Q when only Q is given; when both are given they must agree
/// to 1e-9 relative. Strictly positive: ω_m, γ_m, κ. Nonnegative: Γ, J, g,
/// G, g0, ω_L, T.
pub fn validate(raw: &RawParams) -> Result<SystemParams> {
    require_positive("omega_m", raw.omega_m)?;
    require_positive("kappa", raw.kappa)?;

    let gamma_m = match (raw.gamma_m, raw.quality) {
        (Some(g), None) => g,
        (None, Some(q)) => {
            require_positive("Q", q)?;
            raw.omega_m / q
        }
        (Some(g), Some(q)) => {
            require_positive("Q", q)?;
            let from_q = raw.omega_m / q;
            if rel_diff(g, from_q) > Q_CONSISTENCY_REL {
                return Err(Error::InvalidParams {
                    reason: "gamma_m and Q disagree",
                });
            }
            g
        }
        (None, None) => {
            return Err(Error::InvalidParams {
                reason: "one of gamma_m or Q is required",
            })
        }
    };
    require_positive("gamma_m", gamma_m)?;

    let gamma_atom = raw.gamma_atom.unwrap_or(gamma_m);
    require_nonnegative("Gamma", gamma_atom)?;
    require_nonnegative("J", raw.j)?;
    require_nonnegative("g", raw.g)?;
    require_nonnegative("G", raw.g_atom)?;
    require_nonnegative("g0", raw.g0)?;
    require_nonnegative("omega_L", raw.omega_laser)?;
    require_nonnegative("T", raw.temperature)?;
    if let Some(m) = raw.mass {
        require_positive("m", m)?;
    }

    Ok(SystemParams {
        omega_m: raw.omega_m,
        gamma_m,
        gamma_atom,
        kappa: raw.kappa,
        j: raw.j,
        g: raw.g,
        g_atom: raw.g_atom,
        g0: raw.g0,
        omega_laser: raw.omega_laser,
        temperature: raw.temperature,
        mass: raw.mass,
    })
}

fn require_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveRate { name, value })
    }
}

fn require_nonnegative(name: &'static str, value: f64) -> Result<()> {
    if value >= 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveRate { name, value })
    }
}

fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = libm::fabs(a).max(libm::fabs(b));
    if scale == 0.0 {
        0.0
    } else {
        libm::fabs(a - b) / scale
    }
}

/// Mode frequencies of the coupled-cavity system.
///
/// The symmetric and antisymmetric normal modes sit at ω_cav ± J; the pump
/// drives the antisymmetric mode at ω_d and the signal is read out on the
/// symmetric mode at ω_c. ω_Ω is the classical control-field frequency that
/// selects which mode the atoms dress.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyLayout {
    /// Common bare cavity frequency ω_cav, rad/s.
    pub omega_cav: f64,
    /// Symmetric (sensing) mode frequency ω_c = ω_cav + J, rad/s.
    pub omega_c: f64,
    /// Antisymmetric (pumped) mode frequency ω_d = ω_cav − J, rad/s.
    pub omega_d: f64,
    /// Control-field frequency ω_Ω, rad/s.
    pub omega_control: f64,
}

impl FrequencyLayout {
    /// Build the layout from the bare cavity frequency and tunneling rate.
    /// The mode splitting ω_c − ω_d = 2J holds by construction.
    pub fn new(omega_cav: f64, j: f64, omega_control: f64) -> Self {
        FrequencyLayout {
            omega_cav,
            omega_c: omega_cav + j,
            omega_d: omega_cav - j,
            omega_control,
        }
    }

    /// Mode splitting ω_c − ω_d.
    pub fn splitting(&self) -> f64 {
        self.omega_c - self.omega_d
    }
}

/// The three sensing configurations.
///
/// `ResonantCqnc` is the single-mode arrangement: pumping and sensing share
/// one cavity mode, equivalent to the heterodyne scheme with J = 0.
/// `HeterodyneCqnc` pumps the antisymmetric mode and reads out the symmetric
/// one, split by 2J.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Standard,
    ResonantCqnc,
    HeterodyneCqnc,
}

impl Scheme {
    /// Zero out the couplings that are inactive in this configuration:
    /// the standard scheme has no atoms and no mode splitting (G = 0, J = 0),
    /// resonant CQNC has no splitting (J = 0), heterodyne CQNC keeps all.
    pub fn mask(&self, p: &SystemParams) -> SystemParams {
        let mut masked = *p;
        match self {
            Scheme::Standard => {
                masked.g_atom = 0.0;
                masked.j = 0.0;
            }
            Scheme::ResonantCqnc => masked.j = 0.0,
            Scheme::HeterodyneCqnc => {}
        }
        masked
    }

    pub fn label(&self) -> &'static str {
        match self {
            Scheme::Standard => "standard",
            Scheme::ResonantCqnc => "resonant-cqnc",
            Scheme::HeterodyneCqnc => "heterodyne-cqnc",
        }
    }
}

/// Named example configurations.
///
/// * `fig2` — ω_m = 2π·300 kHz, Q = 1e8, κ = 2π·1 MHz, matched couplings
///   Γ = γ_m and g = G = √(κγ_m)/2 (the resonant optimum), J = 0, T = 0.
/// * `fig3` — `fig2` with the dual-cavity splitting J = κ/√2.
/// * `appendix` — the precooling operating point: same mechanics and cavity,
///   sensing couplings off, T = 300 K. Companion atomic-drive parameters
///   live in [`crate::precool::appendix_precool_params`].
///
/// Every preset uses ω_L = 2π·384 THz and g0 = 2π·300 Hz so that
/// coupling-to-power conversion is always defined.
pub fn preset(name: &str) -> Result<(SystemParams, FrequencyLayout)> {
    let two_pi = 2.0 * core::f64::consts::PI;
    let omega_m = two_pi * 300e3;
    let kappa = two_pi * 1e6;
    let quality = 1e8;
    let gamma_m = omega_m / quality;
    let g0 = two_pi * 300.0;
    let omega_laser = two_pi * 384e12;
    let g_matched = libm::sqrt(kappa * gamma_m) / 2.0;

    let base = RawParams {
        omega_m,
        gamma_m: None,
        quality: Some(quality),
        gamma_atom: Some(gamma_m),
        kappa,
        j: 0.0,
        g: g_matched,
        g_atom: g_matched,
        g0,
        omega_laser,
        temperature: 0.0,
        mass: None,
    };

    match name {
        "fig2" => {
            let p = validate(&base)?;
            // Pump sits on the antisymmetric mode: ω_L = ω_d = ω_cav − J.
            let layout = FrequencyLayout::new(omega_laser + p.j, p.j, omega_laser + 2.0 * p.j);
            Ok((p, layout))
        }
        "fig3" => {
            let p = validate(&RawParams {
                j: kappa / libm::sqrt(2.0),
                ..base
            })?;
            let layout = FrequencyLayout::new(omega_laser + p.j, p.j, omega_laser + 2.0 * p.j);
            Ok((p, layout))
        }
        "appendix" => {
            let p = validate(&RawParams {
                j: kappa / libm::sqrt(2.0),
                g: 0.0,
                g_atom: 0.0,
                temperature: 300.0,
                ..base
            })?;
            // Red-detuned pump: ω_d − ω_L = ω_m; control field on the
            // cooling Raman resonance ω_Ω = ω_d + ω_m.
            let omega_d = omega_laser + omega_m;
            let layout = FrequencyLayout::new(omega_d + p.j, p.j, omega_d + omega_m);
            Ok((p, layout))
        }
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Drive power P = 2ħω_Lκ(g/g0)² that sustains the coupling `g`, in W.
pub fn g_to_power(g: f64, p: &SystemParams) -> Result<f64> {
    require_nonnegative("g", g)?;
    require_positive("g0", p.g0)?;
    let ratio = g / p.g0;
    Ok(2.0 * HBAR * p.omega_laser * p.kappa * ratio * ratio)
}

/// Inverse of [`g_to_power`]: the nonnegative coupling sustained by `power`.
pub fn power_to_g(power: f64, p: &SystemParams) -> Result<f64> {
    require_nonnegative("P", power)?;
    require_positive("g0", p.g0)?;
    require_positive("omega_L", p.omega_laser)?;
    Ok(p.g0 * libm::sqrt(power / (2.0 * HBAR * p.omega_laser * p.kappa)))
}

/// Intracavity photon-number proxy (g/g0)².
pub fn photon_number(g: f64, p: &SystemParams) -> Result<f64> {
    require_positive("g0", p.g0)?;
    let ratio = g / p.g0;
    Ok(ratio * ratio)
}

/// Thermal occupancy of a mode at `omega` for bath temperature `temperature`.
///
/// Carries both the classical equipartition value k_BT/(ħω) used by the
/// closed-form spectra and the Bose-Einstein value; the caller selects.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Occupancy {
    pub classical: f64,
    pub bose_einstein: f64,
}

pub fn thermal_occupancy(temperature: f64, omega: f64) -> Occupancy {
    if temperature <= 0.0 {
        return Occupancy {
            classical: 0.0,
            bose_einstein: 0.0,
        };
    }
    let x = HBAR * omega / (KB * temperature);
    Occupancy {
        classical: 1.0 / x,
        bose_einstein: 1.0 / libm::expm1(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_PI: f64 = 2.0 * core::f64::consts::PI;

    fn raw_fig2() -> RawParams {
        RawParams {
            omega_m: TWO_PI * 300e3,
            quality: Some(1e8),
            kappa: TWO_PI * 1e6,
            ..Default::default()
        }
    }

    #[test]
    fn quality_factor_fills_gamma_m() {
        let p = validate(&raw_fig2()).unwrap();
        let expected = TWO_PI * 3e-3;
        assert!((p.gamma_m - expected).abs() / expected < 1e-12);
    }

    #[test]
    fn quality_round_trip() {
        let p = validate(&RawParams {
            omega_m: 1.0,
            gamma_m: Some(1e-8),
            ..raw_fig2()
        })
        .unwrap();
        assert!((p.quality() - 1e8).abs() / 1e8 < 1e-12);
    }

    #[test]
    fn zero_kappa_rejected() {
        let err = validate(&RawParams {
            kappa: 0.0,
            ..raw_fig2()
        })
        .unwrap_err();
        assert!(matches!(err, Error::NonPositiveRate { name: "kappa", .. }));
    }

    #[test]
    fn inconsistent_q_rejected() {
        let err = validate(&RawParams {
            gamma_m: Some(1.0),
            quality: Some(1e8),
            ..raw_fig2()
        })
        .unwrap_err();
        assert!(matches!(err, Error::InvalidParams { .. }));
    }

    #[test]
    fn presets_match_anchors() {
        let (fig2, layout2) = preset("fig2").unwrap();
        assert_eq!(fig2.kappa, TWO_PI * 1e6);
        assert_eq!(fig2.omega_m, TWO_PI * 300e3);
        assert_eq!(fig2.j, 0.0);
        assert_eq!(layout2.splitting(), 0.0);

        let (fig3, layout3) = preset("fig3").unwrap();
        assert_eq!(fig3.omega_laser, TWO_PI * 384e12);
        assert!((fig3.j - fig3.kappa / 2f64.sqrt()).abs() < 1e-9);
        // omega_cav ~ 2.4e15 rad/s, so the splitting difference carries its
        // rounding (~sub-rad/s), far below J ~ 4.4e6 rad/s.
        assert!((layout3.splitting() - 2.0 * fig3.j).abs() < 1.0);

        let (app, _) = preset("appendix").unwrap();
        assert_eq!(app.temperature, 300.0);
        assert_eq!(app.g, 0.0);

        assert!(matches!(preset("bogus"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn preset_fig2_passes_validate_unchanged() {
        let (p, _) = preset("fig2").unwrap();
        let revalidated = validate(&RawParams {
            omega_m: p.omega_m,
            gamma_m: Some(p.gamma_m),
            quality: None,
            gamma_atom: Some(p.gamma_atom),
            kappa: p.kappa,
            j: p.j,
            g: p.g,
            g_atom: p.g_atom,
            g0: p.g0,
            omega_laser: p.omega_laser,
            temperature: p.temperature,
            mass: p.mass,
        })
        .unwrap();
        assert_eq!(p, revalidated);
    }

    #[test]
    fn power_conversion_anchors() {
        let (p, _) = preset("fig3").unwrap();
        // Unit photon number: P = 2 hbar omega_L kappa.
        let punit = g_to_power(p.g0, &p).unwrap();
        let expected = 2.0 * HBAR * p.omega_laser * p.kappa;
        assert!((punit - expected).abs() / expected < 1e-12);
        assert_eq!(g_to_power(0.0, &p).unwrap(), 0.0);
        // Independently recomputed: 2 hbar omega_L kappa (172.1/g0)^2.
        let pw = g_to_power(172.1, &p).unwrap();
        assert!((pw - 2.6654e-14).abs() / 2.6654e-14 < 1e-3);
    }

    #[test]
    fn power_round_trip() {
        let (p, _) = preset("fig3").unwrap();
        for &g in &[1e-3, 172.1, 4.7e5] {
            let back = power_to_g(g_to_power(g, &p).unwrap(), &p).unwrap();
            assert!((back - g).abs() / g < 1e-12);
        }
    }

    #[test]
    fn occupancy_anchors() {
        let occ0 = thermal_occupancy(0.0, TWO_PI * 300e3);
        assert_eq!(occ0.classical, 0.0);
        assert_eq!(occ0.bose_einstein, 0.0);

        // k_B 300 K / (hbar 2 pi 300 kHz), recomputed by hand.
        let occ = thermal_occupancy(300.0, TWO_PI * 300e3);
        assert!((occ.classical - 2.0837e7).abs() / 2.0837e7 < 1e-4);
        // High-temperature point: classical and Bose-Einstein agree to 4
        // significant figures.
        assert!((occ.classical - occ.bose_einstein).abs() / occ.classical < 1e-4);

        // hbar omega = k_B T ln 2 puts the Bose-Einstein value at exactly 1.
        let t = 1.0;
        let omega = KB * t * core::f64::consts::LN_2 / HBAR;
        let occ1 = thermal_occupancy(t, omega);
        assert!((occ1.bose_einstein - 1.0).abs() < 1e-12);
    }

    #[test]
    fn occupancies_agree_when_hot() {
        // Classical and Bose-Einstein within 1e-3 relative whenever
        // k_B T / (hbar omega) > 500.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..1000 {
            let omega = 10f64.powf(3.0 + 6.0 * next());
            let occ_min = 500.0 * (1.0 + 10.0 * next());
            let t = occ_min * HBAR * omega / KB;
            let occ = thermal_occupancy(t, omega);
            assert!(
                (occ.classical - occ.bose_einstein).abs() / occ.classical < 1e-3,
                "ratio {occ_min}"
            );
        }
    }

    #[test]
    fn scheme_masking() {
        let (p, _) = preset("fig3").unwrap();
        let std = Scheme::Standard.mask(&p);
        assert_eq!(std.g_atom, 0.0);
        assert_eq!(std.j, 0.0);
        let res = Scheme::ResonantCqnc.mask(&p);
        assert_eq!(res.j, 0.0);
        assert_eq!(res.g_atom, p.g_atom);
        assert_eq!(Scheme::HeterodyneCqnc.mask(&p), p);
    }
}
