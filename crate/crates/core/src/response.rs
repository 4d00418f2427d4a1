//! Effective susceptibilities of the cavity field, the mechanics and the
//! atomic ensemble, plus the modified quadrature susceptibility of the
//! sensing mode.
//!
//! All susceptibilities are evaluated directly in double-precision complex
//! arithmetic; physical γ_m, Γ, κ > 0 keep every pole off the real axis so
//! no regularization is applied. Frequencies are Fourier frequencies in the
//! frame rotating at the pump, where the sensing mode carries an effective
//! detuning 2J.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::params::SystemParams;
use crate::{Error, Result};

/// Cavity quadrature susceptibility χ_c(ω) = 1/(iω + κ/2), in s.
pub fn chi_c(omega: f64, kappa: f64) -> Complex64 {
    Complex64::new(kappa / 2.0, omega).inv()
}

/// Mechanical susceptibility χ_m(ω) = ω_m/(ω_m² − ω² + iωγ_m), in s.
///
/// Singular only in the degenerate case γ_m = 0 at ω = ±ω_m, which validated
/// parameters exclude.
pub fn chi_m(omega: f64, omega_m: f64, gamma_m: f64) -> Result<Complex64> {
    let den = Complex64::new(omega_m * omega_m - omega * omega, omega * gamma_m);
    if den == Complex64::ZERO {
        return Err(Error::DivisionSingularity { context: "chi_m" });
    }
    Ok(omega_m / den)
}

/// Atomic (negative-mass) susceptibility
/// χ_σ(ω) = −ω_m/(ω_m² − ω² + iωΓ + Γ²/4), in s.
///
/// The overall minus sign is the inverted-oscillator response that mirrors
/// χ_m; the extra Γ²/4 in the denominator is what limits the cancellation.
pub fn chi_sigma(omega: f64, omega_m: f64, gamma_atom: f64) -> Complex64 {
    let den = Complex64::new(
        omega_m * omega_m - omega * omega + gamma_atom * gamma_atom / 4.0,
        omega * gamma_atom,
    );
    -omega_m / den
}

/// Backaction source term g²χ_m + G²χ_σ.
///
/// Under matched couplings (g = G, Γ = γ_m) this residual is suppressed to
/// g²·|χ_m·χ_σ|·Γ²/(4ω_m) in magnitude.
pub fn backaction_residual(omega: f64, p: &SystemParams) -> Result<Complex64> {
    let cm = chi_m(omega, p.omega_m, p.gamma_m)?;
    let cs = chi_sigma(omega, p.omega_m, p.gamma_atom);
    Ok(p.g * p.g * cm + p.g_atom * p.g_atom * cs)
}

/// Modified quadrature susceptibility χ′_c of the sensing mode,
/// 1/χ′_c = 1/χ_c + 2Jχ_c·[2J − (g²χ_m + G²χ_σ)].
///
/// Collapses to χ_c when J = 0 (bit-for-bit).
pub fn chi_c_prime(omega: f64, p: &SystemParams) -> Result<Complex64> {
    let cc = chi_c(omega, p.kappa);
    if p.j == 0.0 {
        return Ok(cc);
    }
    let inv = cc.inv() + 2.0 * p.j * cc * (2.0 * p.j - backaction_residual(omega, p)?);
    if inv == Complex64::ZERO || !inv.is_finite() {
        return Err(Error::DivisionSingularity {
            context: "chi_c_prime",
        });
    }
    Ok(inv.inv())
}

/// The four susceptibilities of the system at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseSet {
    pub omega: f64,
    pub chi_c: Complex64,
    pub chi_m: Complex64,
    pub chi_sigma: Complex64,
    pub chi_c_prime: Complex64,
}

/// Evaluate all four susceptibilities at `omega`.
pub fn response_set(omega: f64, p: &SystemParams) -> Result<ResponseSet> {
    Ok(ResponseSet {
        omega,
        chi_c: chi_c(omega, p.kappa),
        chi_m: chi_m(omega, p.omega_m, p.gamma_m)?,
        chi_sigma: chi_sigma(omega, p.omega_m, p.gamma_atom),
        chi_c_prime: chi_c_prime(omega, p)?,
    })
}

/// Batched evaluation over a frequency grid.
pub fn response_grid(omegas: &[f64], p: &SystemParams) -> Result<Vec<ResponseSet>> {
    omegas.iter().map(|&w| response_set(w, p)).collect()
}
