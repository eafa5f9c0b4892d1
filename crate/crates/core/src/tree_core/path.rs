use std::collections::VecDeque;

use thiserror::Error;

use super::tree::{NodeId, Port, PortLabeledTree};

/// Sequence of ports `(p1, q1, p2, ...)` read along a simple path: `p1` leaves
/// the start, and so on; only outgoing ports are recorded.
pub type PathCode = Vec<Port>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("step {step}: port {port} does not exist at a node of degree {degree}")]
    InvalidPort { step: usize, port: Port, degree: usize },
    #[error("step {step} walks back along the edge it just used")]
    NotSimple { step: usize },
}

/// Nodes on the unique path from `v` to `w`, both included.
pub fn path_nodes(tree: &PortLabeledTree, v: NodeId, w: NodeId) -> Vec<NodeId> {
    let n = tree.node_count();
    let mut prev = vec![usize::MAX; n];
    prev[w] = w;
    let mut queue = VecDeque::from([w]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &(y, _) in tree.neighbors(x) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut out = vec![v];
    let mut x = v;
    while x != w {
        x = prev[x];
        out.push(x);
    }
    out
}

pub fn path_ports(tree: &PortLabeledTree, v: NodeId, w: NodeId) -> PathCode {
    let nodes = path_nodes(tree, v, w);
    nodes.windows(2).map(|e| tree.port_towards(e[0], e[1]).unwrap()).collect()
}

/// Walks `code` from `v` and returns the final node.
pub fn follow_path(tree: &PortLabeledTree, v: NodeId, code: &[Port]) -> Result<NodeId, PathError> {
    let mut at = v;
    let mut came_through: Option<Port> = None;
    for (step, &port) in code.iter().enumerate() {
        let degree = tree.degree(at);
        let (next, back) = tree
            .neighbor(at, port)
            .ok_or(PathError::InvalidPort { step, port, degree })?;
        if came_through == Some(port) {
            return Err(PathError::NotSimple { step });
        }
        at = next;
        came_through = Some(back);
    }
    Ok(at)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::tree::{build_tree, Edge};

    #[test]
    fn path_ports_and_follow_agree() {
        let t = build_tree(&[Edge::new(0, 1, 1, 0), Edge::new(1, 1, 2, 0), Edge::new(0, 0, 3, 0)]).unwrap();
        let code = path_ports(&t, 3, 2);
        assert_eq!(code, vec![0, 1, 1]);
        assert_eq!(follow_path(&t, 3, &code), Ok(2));
        assert_eq!(path_ports(&t, 2, 2), Vec::<Port>::new());
    }

    #[test]
    fn follow_rejects_bad_walks() {
        let t = build_tree(&[Edge::new(0, 0, 1, 0), Edge::new(1, 1, 2, 0)]).unwrap();
        assert_eq!(follow_path(&t, 0, &[1]), Err(PathError::InvalidPort { step: 0, port: 1, degree: 1 }));
        assert_eq!(follow_path(&t, 0, &[0, 0]), Err(PathError::NotSimple { step: 1 }));
    }
}
