use alloc::string::String;
use core::fmt;

/// Errors surfaced by the noise-budget and precooling calculations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A rate or frequency that must be strictly positive was not.
    NonPositiveRate { name: &'static str, value: f64 },
    /// SI-unit output was requested but no effective mass is set.
    MassMissing,
    /// Preset name is not one of the known configurations.
    UnknownPreset(String),
    /// A susceptibility denominator vanished exactly.
    DivisionSingularity { context: &'static str },
    /// The 6x6 Langevin system is singular at this frequency.
    SingularSystem { omega: f64 },
    /// The field-mechanics coupling g is zero; force referral is undefined.
    ZeroCoupling,
    /// Parameter combination violates a structural invariant.
    InvalidParams { reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveRate { name, value } => {
                write!(f, "{name} must be positive, got {value:e}")
            }
            Error::MassMissing => {
                write!(f, "SI conversion requires the effective mass m")
            }
            Error::UnknownPreset(name) => {
                write!(f, "unknown preset `{name}` (expected fig2, fig3 or appendix)")
            }
            Error::DivisionSingularity { context } => {
                write!(f, "division singularity in {context}")
            }
            Error::SingularSystem { omega } => {
                write!(f, "singular Langevin system at omega = {omega:e} rad/s")
            }
            Error::ZeroCoupling => {
                write!(f, "field-mechanics coupling g is zero")
            }
            Error::InvalidParams { reason } => write!(f, "invalid parameters: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
