//! Brute-force frequency-domain solve of the full Heisenberg-Langevin
//! system.
//!
//! The six quadratures `[x, p, x_c, p_c, x_sigma, p_sigma]` obey linear
//! equations of motion driven by six input channels
//! `[f, F_ext, x_c_in, p_c_in, x_sigma_in, p_sigma_in]`. With the Fourier
//! convention O(ω) = (2π)^{-1/2} ∫dt O(t) e^{-iωt}, a time derivative maps
//! to iω, so the frequency-domain system is (iω·I − A)·v = B·w. Solving it
//! channel by channel and applying the input-output relation
//! p_c_out = √κ·p_c − p_c_in gives the transfer gains from every noise
//! input and from the signal force to the detected quadrature, from which
//! the added force noise follows with no small-parameter approximation.
//! This is the independent reference every closed form in [`crate::spectra`]
//! is checked against.

use num_complex::Complex64;

use crate::linalg::{solve_columns, DIM};
use crate::params::{thermal_occupancy, Scheme, SystemParams};
use crate::spectra::NoiseBudget;
use crate::{Error, Result};

/// State-vector ordering of the solved quadratures.
pub mod state {
    pub const MECH_X: usize = 0;
    pub const MECH_P: usize = 1;
    pub const CAVITY_X: usize = 2;
    pub const CAVITY_P: usize = 3;
    pub const ATOM_X: usize = 4;
    pub const ATOM_P: usize = 5;
}

/// Input-channel ordering.
///
/// The vacuum channels carry symmetrized spectral density exactly 1/2; the
/// thermal force channel carries the selected thermal model; the external
/// force is a deterministic signal with no stochastic spectrum.
pub mod channel {
    pub const THERMAL_FORCE: usize = 0;
    pub const EXTERNAL_FORCE: usize = 1;
    pub const CAVITY_X_IN: usize = 2;
    pub const CAVITY_P_IN: usize = 3;
    pub const ATOM_X_IN: usize = 4;
    pub const ATOM_P_IN: usize = 5;
}

/// Spectral density model for the thermal force channel.
///
/// `PaperConsistent` is the classical k_BT/(ħω_m) that the closed-form
/// spectra carry (zero at T = 0); `Symmetrized` is the full quantum
/// n_BE + 1/2 including zero-point force noise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThermalNoise {
    #[default]
    PaperConsistent,
    Symmetrized,
}

impl ThermalNoise {
    /// Thermal force spectral density for a mechanical mode at `omega_m`.
    pub fn force_psd(&self, temperature: f64, omega_m: f64) -> f64 {
        let occ = thermal_occupancy(temperature, omega_m);
        match self {
            ThermalNoise::PaperConsistent => occ.classical,
            ThermalNoise::Symmetrized => occ.bose_einstein + 0.5,
        }
    }
}

/// The assembled frequency-domain system (iω·I − A)·v = B·w.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    /// Coefficient matrix M = iω·I − A.
    pub matrix: [[Complex64; DIM]; DIM],
    /// Input map B with the √γ_m, √κ, √Γ noise prefactors.
    pub input_map: [[Complex64; DIM]; DIM],
}

/// Assemble the 6x6 system at `omega`. The scheme masks the couplings that
/// are inactive in that configuration (see [`Scheme::mask`]).
pub fn assemble(omega: f64, p: &SystemParams, scheme: Scheme) -> LinearSystem {
    let p = scheme.mask(p);
    let mut drift = [[0.0f64; DIM]; DIM];

    use state::*;
    drift[MECH_X][MECH_P] = p.omega_m;
    drift[MECH_P][MECH_X] = -p.omega_m;
    drift[MECH_P][MECH_P] = -p.gamma_m;
    drift[MECH_P][CAVITY_X] = -p.g;
    drift[CAVITY_X][CAVITY_X] = -p.kappa / 2.0;
    drift[CAVITY_X][CAVITY_P] = 2.0 * p.j;
    drift[CAVITY_P][CAVITY_X] = -2.0 * p.j;
    drift[CAVITY_P][CAVITY_P] = -p.kappa / 2.0;
    drift[CAVITY_P][MECH_X] = -p.g;
    drift[CAVITY_P][ATOM_X] = -p.g_atom;
    drift[ATOM_X][ATOM_X] = -p.gamma_atom / 2.0;
    drift[ATOM_X][ATOM_P] = -p.omega_m;
    drift[ATOM_P][ATOM_X] = p.omega_m;
    drift[ATOM_P][ATOM_P] = -p.gamma_atom / 2.0;
    drift[ATOM_P][CAVITY_X] = -p.g_atom;

    let mut matrix = [[Complex64::new(0.0, 0.0); DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            matrix[i][j] = Complex64::new(-drift[i][j], if i == j { omega } else { 0.0 });
        }
    }

    let mut input_map = [[Complex64::new(0.0, 0.0); DIM]; DIM];
    let sqrt_gm = libm::sqrt(p.gamma_m);
    let sqrt_k = libm::sqrt(p.kappa);
    let sqrt_ga = libm::sqrt(p.gamma_atom);
    input_map[MECH_P][channel::THERMAL_FORCE] = sqrt_gm.into();
    input_map[MECH_P][channel::EXTERNAL_FORCE] = sqrt_gm.into();
    input_map[CAVITY_X][channel::CAVITY_X_IN] = sqrt_k.into();
    input_map[CAVITY_P][channel::CAVITY_P_IN] = sqrt_k.into();
    input_map[ATOM_X][channel::ATOM_X_IN] = sqrt_ga.into();
    input_map[ATOM_P][channel::ATOM_P_IN] = sqrt_ga.into();

    LinearSystem { matrix, input_map }
}

/// Complex gains from every input channel to the detected output quadrature
/// p_c_out at a single frequency.
#[derive(Debug, Clone, Copy)]
pub struct TransferRow {
    pub omega: f64,
    /// Indexed by [`channel`] constants.
    pub gains: [Complex64; DIM],
}

impl TransferRow {
    /// Signal gain T_F from the external force to p_c_out.
    pub fn force_gain(&self) -> Complex64 {
        self.gains[channel::EXTERNAL_FORCE]
    }

    /// Contribution of one noise channel to the detected output spectrum,
    /// |T_channel|²·S_channel (not referred to the input force).
    pub fn output_power(&self, ch: usize, psd: f64) -> f64 {
        self.gains[ch].norm_sqr() * psd
    }
}

/// Solve the system at `omega` and return the p_c_out gain per channel.
pub fn transfer(omega: f64, p: &SystemParams, scheme: Scheme) -> Result<TransferRow> {
    let sys = assemble(omega, p, scheme);
    let states = solve_columns(&sys.matrix, &sys.input_map, omega)?;
    let sqrt_k = libm::sqrt(p.kappa);
    let mut gains = [Complex64::new(0.0, 0.0); DIM];
    for (ch, gain) in gains.iter_mut().enumerate() {
        *gain = sqrt_k * states[state::CAVITY_P][ch];
    }
    // Input-output relation: the detected field subtracts the incident
    // p_c_in once.
    gains[channel::CAVITY_P_IN] -= 1.0;
    Ok(TransferRow { omega, gains })
}

/// Added force noise at `omega` from the full linear solve, referred to the
/// input force: S_add = Σ |T_ch/T_F|²·S_ch over the five noise channels.
///
/// Budget mapping: `thermal` is the thermal-force channel, `shot` the p_c
/// vacuum input, `backaction` the x_c vacuum input (which in the heterodyne
/// configuration also carries the 2J quadrature-mixing part), `atomic` the
/// two atomic vacuum inputs combined.
pub fn oracle_spectrum(
    omega: f64,
    p: &SystemParams,
    scheme: Scheme,
    temperature: f64,
    thermal: ThermalNoise,
) -> Result<NoiseBudget> {
    if p.g == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    let row = transfer(omega, p, scheme)?;
    let force = row.force_gain().norm_sqr();
    if force == 0.0 {
        return Err(Error::ZeroCoupling);
    }

    let s_f = thermal.force_psd(temperature, p.omega_m);
    let refer = |ch: usize, psd: f64| row.gains[ch].norm_sqr() / force * psd;

    Ok(NoiseBudget::from_components(
        omega,
        refer(channel::THERMAL_FORCE, s_f),
        refer(channel::CAVITY_P_IN, 0.5),
        refer(channel::CAVITY_X_IN, 0.5),
        refer(channel::ATOM_X_IN, 0.5) + refer(channel::ATOM_P_IN, 0.5),
        p,
        false,
    ))
}
