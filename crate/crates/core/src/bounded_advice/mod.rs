//! Advice drawn from a constant number of distinct strings.

pub mod betas;
pub mod colored_map;
pub mod election_index;
pub mod marking;
pub mod markers;
pub mod payload;
pub mod decode;
pub mod scheme;
