//! Leader election with advice in anonymous port-labeled trees.
//!
//! An oracle that sees the whole tree hands every node a short string; each
//! node then looks only at its radius-τ neighborhood and outputs a port path
//! towards a common leader.

pub mod bounded_advice;
pub mod codec;
pub mod election;
pub mod families;
pub mod harness;
pub mod tree_core;
pub mod unbounded_advice;
