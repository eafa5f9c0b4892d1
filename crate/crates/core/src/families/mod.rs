//! Tree families behind the advice lower bounds: a base tree plus sites where
//! one port is exchanged with another, so that members differ only in the
//! port numbers far from the observers.
//!
//! Members are never stored; a member is the base tree with one choice
//! applied per site.

pub mod descriptor;
pub mod general;
pub mod line;
pub mod pigeonhole;
pub mod witness;

use thiserror::Error;

use crate::tree_core::{NodeId, Port, PortLabeledTree};

pub use descriptor::{parse_family, FamilySpec};
pub use general::{build_general_family, GeneralFamilyParams, Regime};
pub use line::{build_line_family, LineFamilyParams};
pub use pigeonhole::{check_witness, pigeonhole_check, PigeonholeWitness};
pub use witness::witness_coloring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad family parameters: {0}")]
    BadParams(String),
    #[error("coloring does not apply: {0}")]
    RegimeMismatch(String),
    #[error("descriptor does not fit the family: {0}")]
    BadDescriptor(String),
    #[error("no witness among the members examined")]
    Exhausted,
    #[error("a witness needs two different members")]
    SameMember,
    #[error("witness members are told apart by the observer")]
    BallsDiffer,
    #[error("witness members share the observer's path to the leader")]
    SamePath,
}

/// One place where a member may exchange `fixed` with one of `choices`;
/// choosing `fixed` itself leaves the base tree unchanged there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapSite {
    pub node: NodeId,
    pub fixed: Port,
    pub choices: Vec<Port>,
}

/// One of the two subfamilies: its swap sites, the nodes whose balls cannot
/// see them, and a leader whose path from every observer crosses them all.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Half {
    pub sites: Vec<SwapSite>,
    pub observers: Vec<NodeId>,
    pub leader: NodeId,
}

/// What a node is in the construction; colorings are assigned by role.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// The common endpoint of all long paths, and the leader.
    Center,
    /// `v_pos` on the line of the line family.
    Line { pos: usize },
    /// A leaf hanging off the line at `pos`.
    Hanging { pos: usize },
    /// Node `level` of path `strand` in subtree `branch`, level 0 the far end.
    Path { branch: usize, strand: usize, level: usize },
    White { branch: usize, strand: usize, level: usize },
    /// The `bit`-th distance leaf, most significant first.
    Grey { branch: usize, strand: usize, level: usize, bit: usize },
    Black { branch: usize, strand: usize, level: usize },
    /// The `slot`-th leaf carrying the strand's string.
    Dotted { branch: usize, strand: usize, level: usize, slot: usize },
    /// The extra node making an odd diameter.
    Extension,
}

#[derive(Clone, Debug)]
pub struct TreeFamily {
    pub base: PortLabeledTree,
    pub roles: Vec<Role>,
    pub halves: [Half; 2],
}

impl TreeFamily {
    pub fn node_count(&self) -> usize {
        self.base.node_count()
    }

    /// Members of one half, `None` on overflow.
    pub fn member_count(&self, half: usize) -> Option<u128> {
        self.halves[half]
            .sites
            .iter()
            .try_fold(1u128, |acc, s| acc.checked_mul(s.choices.len() as u128))
    }

    /// The `index`-th descriptor in lexicographic order of choice positions.
    pub fn descriptor(&self, half: usize, mut index: u128) -> Vec<Port> {
        let sites = &self.halves[half].sites;
        let mut out = vec![0; sites.len()];
        for (slot, site) in out.iter_mut().zip(sites).rev() {
            let width = site.choices.len() as u128;
            *slot = site.choices[(index % width) as usize];
            index /= width;
        }
        out
    }

    pub fn member(&self, half: usize, descriptor: &[Port]) -> Result<PortLabeledTree, FamilyError> {
        let sites = &self.halves[half].sites;
        if descriptor.len() != sites.len() {
            return Err(FamilyError::BadDescriptor(format!(
                "{} choices for {} sites",
                descriptor.len(),
                sites.len()
            )));
        }
        let mut tree = self.base.clone();
        for (site, &choice) in sites.iter().zip(descriptor) {
            if !site.choices.contains(&choice) {
                return Err(FamilyError::BadDescriptor(format!("port {choice} not offered at node {}", site.node)));
            }
            tree.swap_ports(site.node, site.fixed, choice);
        }
        Ok(tree)
    }
}

/// Comma-separated rendering of a descriptor.
pub fn format_descriptor(descriptor: &[Port]) -> String {
    descriptor.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_descriptor(text: &str) -> Result<Vec<Port>, FamilyError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| FamilyError::BadDescriptor(format!("not a port: {t:?}"))))
        .collect()
}

/// Assembles a tree from per-node neighbor lists indexed by port, where an
/// edge is given once as `(u, port at u, v, port at v)`.
fn assemble(count: usize, edges: &[(NodeId, Port, NodeId, Port)]) -> Result<PortLabeledTree, FamilyError> {
    let edges: Vec<crate::tree_core::Edge> =
        edges.iter().map(|&(u, pu, v, pv)| crate::tree_core::Edge::new(u, pu, v, pv)).collect();
    PortLabeledTree::from_edges(count, &edges).map_err(|e| FamilyError::BadParams(e.to_string()))
}
