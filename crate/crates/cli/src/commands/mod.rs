pub mod power_sweep;
pub mod precool;
pub mod reproduce;
pub mod spectrum;
pub mod sql;
pub mod validate;
