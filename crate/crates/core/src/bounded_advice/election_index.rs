//! Exact smallest election time under λ-valent single-symbol advice, by
//! exhaustive search on small trees.
//!
//! A coloring works at time τ when some node `r` has, for every class of
//! nodes with equal radius-τ balls, one common port path to `r`.

use rayon::prelude::*;
use thiserror::Error;

use crate::tree_core::{ball_classes, diameter_and_center, NodeId, PathCode, PortLabeledTree, Rooted};

/// Largest number of colorings one radius is allowed to scan.
pub const SEARCH_LIMIT: u64 = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElectionCertificate {
    pub tau: usize,
    pub lambda: usize,
    pub colors: Vec<u8>,
    pub leader: NodeId,
    /// Equal ids mean equal radius-τ balls under `colors`.
    pub class_of: Vec<u32>,
    /// The path every node outputs.
    pub outputs: Vec<PathCode>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("no {lambda}-coloring elects within time {max_tau}")]
    NotFound { lambda: usize, max_tau: usize },
    #[error("alphabet size must be at least 2, got {0}")]
    InvalidLambda(usize),
    #[error("{lambda}^{nodes} colorings exceed the search limit")]
    TooLarge { lambda: usize, nodes: usize },
}

/// Colors of the `index`-th coloring in lexicographic order (node 0 most significant).
pub fn nth_coloring(index: u64, lambda: usize, n: usize) -> Vec<u8> {
    let mut colors = vec![0u8; n];
    let mut rest = index;
    for c in colors.iter_mut().rev() {
        *c = (rest % lambda as u64) as u8;
        rest /= lambda as u64;
    }
    colors
}

/// Per candidate leader, every node's path to it.
fn all_root_paths(tree: &PortLabeledTree) -> Vec<Vec<PathCode>> {
    (0..tree.node_count())
        .map(|r| {
            let rooted = Rooted::new(tree, r);
            (0..tree.node_count()).map(|v| rooted.ports_to_root(v)).collect()
        })
        .collect()
}

/// Smallest leader whose paths are constant on every class.
fn consistent_leader(class_of: &[u32], paths: &[Vec<PathCode>]) -> Option<NodeId> {
    let classes = class_of.iter().max().map_or(0, |&m| m as usize + 1);
    (0..paths.len()).find(|&r| {
        let mut witness: Vec<Option<NodeId>> = vec![None; classes];
        class_of.iter().enumerate().all(|(v, &c)| match witness[c as usize] {
            None => {
                witness[c as usize] = Some(v);
                true
            }
            Some(u) => paths[r][u] == paths[r][v],
        })
    })
}

/// First certificate over increasing τ, then colorings in lexicographic
/// order, then the smallest leader id.
pub fn election_index(
    tree: &PortLabeledTree,
    lambda: usize,
    max_tau: Option<usize>,
) -> Result<ElectionCertificate, IndexError> {
    if lambda < 2 {
        return Err(IndexError::InvalidLambda(lambda));
    }
    let n = tree.node_count();
    let total = (lambda as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= SEARCH_LIMIT)
        .ok_or(IndexError::TooLarge { lambda, nodes: n })?;
    let max_tau = max_tau.unwrap_or_else(|| diameter_and_center(tree).diameter.div_ceil(2));
    let paths = all_root_paths(tree);
    for tau in 0..=max_tau {
        let hit = (0..total).into_par_iter().find_map_first(|index| {
            let colors = nth_coloring(index, lambda, n);
            let class_of = ball_classes(tree, &colors, tau);
            consistent_leader(&class_of, &paths).map(|leader| (colors, class_of, leader))
        });
        if let Some((colors, class_of, leader)) = hit {
            let outputs = (0..n).map(|v| paths[leader][v].clone()).collect();
            return Ok(ElectionCertificate { tau, lambda, colors, leader, class_of, outputs });
        }
    }
    Err(IndexError::NotFound { lambda, max_tau })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::{build_tree, Edge};

    #[test]
    fn coloring_order_is_lexicographic() {
        assert_eq!(nth_coloring(0, 2, 3), vec![0, 0, 0]);
        assert_eq!(nth_coloring(1, 2, 3), vec![0, 0, 1]);
        assert_eq!(nth_coloring(5, 3, 2), vec![1, 2]);
    }

    #[test]
    fn single_node_and_edge() {
        let one = PortLabeledTree::single_node();
        assert_eq!(election_index(&one, 2, None).unwrap().tau, 0);
        let two = build_tree(&[Edge::new(0, 0, 1, 0)]).unwrap();
        let cert = election_index(&two, 2, None).unwrap();
        // the two endpoints look alike until colored apart
        assert_eq!(cert.tau, 0);
        assert_eq!(cert.colors, vec![0, 1]);
    }

    #[test]
    fn errors() {
        let two = build_tree(&[Edge::new(0, 0, 1, 0)]).unwrap();
        assert_eq!(election_index(&two, 1, None), Err(IndexError::InvalidLambda(1)));
    }
}
