//! Frequency-domain noise modeling for quantum-limited force sensing in a
//! dual-cavity hybrid atom-optomechanical system.
//!
//! A mechanical oscillator in one cavity transduces an external force onto
//! the phase quadrature of the symmetric mode of two tunnel-coupled cavities,
//! while an inverted ultracold atomic ensemble in the second cavity acts as a
//! negative-mass oscillator that coherently cancels measurement backaction
//! (CQNC). This crate evaluates:
//!
//! * the effective susceptibilities of field, mechanics and atoms
//!   ([`response`]),
//! * closed-form added-force-noise spectral densities, the standard quantum
//!   limit and the CQNC sensitivity limit ([`spectra`]),
//! * a brute-force frequency-domain solve of the full six-variable
//!   Heisenberg-Langevin system that serves as an independent reference for
//!   every closed form ([`langevin`]),
//! * measurement-strength optimization and driving-power sweeps
//!   ([`optimum`]),
//! * the EIT-based precooling calculation for the same hardware
//!   ([`precool`]).
//!
//! All rates and frequencies are angular (rad/s). Spectra are dimensionless
//! in zero-point units; SI conversion is available when an effective mass is
//! supplied. The crate is `no_std` + `alloc`; IO, configuration files and the
//! command-line front end live in the companion `cqnc-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod langevin;
mod linalg;
pub mod optimum;
pub mod params;
pub mod precool;
pub mod response;
pub mod spectra;

mod error;

pub use error::Error;
pub use num_complex::Complex64;

pub type Result<T> = core::result::Result<T, Error>;
