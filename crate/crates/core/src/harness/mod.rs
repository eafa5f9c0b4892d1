//! Running schemes end to end, checking outcomes and sweeping parameters.

pub mod generate;
pub mod run;
pub mod sweep;
