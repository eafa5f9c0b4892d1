use thiserror::Error;

use super::advice::{AdviceAssignment, AdviceString};
use super::path::PathCode;
use super::tree::{NodeId, Port, PortLabeledTree};

/// Edge from a ball node up to its parent (the parent is closer to the center).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BallLink {
    pub node: usize,
    pub port_at_parent: Port,
    pub port_at_child: Port,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BallNode {
    pub advice: AdviceString,
    /// Degree in the whole tree, also for frontier nodes whose edges leave the ball.
    pub degree: usize,
    pub depth: usize,
    pub parent: Option<BallLink>,
    /// Sorted by the port used at this node.
    pub children: Vec<usize>,
}

/// What a node learns in `radius` rounds: the labeled subtree around it, with
/// no node identities.
///
/// Nodes are stored in preorder from the center (index 0), visiting children
/// by increasing port, so two balls are isomorphic exactly when their arenas
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledBall {
    radius: usize,
    nodes: Vec<BallNode>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BallError {
    #[error("cannot compare balls of radius {0} and {1}")]
    RadiusMismatch(usize, usize),
}

pub fn extract_ball(tree: &PortLabeledTree, advice: &AdviceAssignment, v: NodeId, radius: usize) -> LabeledBall {
    extract_ball_labeled(tree, advice.strings(), v, radius)
}

pub fn extract_ball_labeled(tree: &PortLabeledTree, labels: &[AdviceString], v: NodeId, radius: usize) -> LabeledBall {
    extract_ball_with_ids(tree, labels, v, radius).0
}

/// The ball together with the tree node behind each ball index.
pub fn extract_ball_with_ids(
    tree: &PortLabeledTree,
    labels: &[AdviceString],
    v: NodeId,
    radius: usize,
) -> (LabeledBall, Vec<NodeId>) {
    let mut nodes: Vec<BallNode> = Vec::new();
    let mut ids = Vec::new();
    // (tree node, tree parent, link to ball parent, depth)
    let mut stack: Vec<(NodeId, Option<NodeId>, Option<BallLink>, usize)> = vec![(v, None, None, 0)];
    while let Some((x, from, link, depth)) = stack.pop() {
        let idx = nodes.len();
        ids.push(x);
        if let Some(l) = link {
            nodes[l.node].children.push(idx);
        }
        nodes.push(BallNode {
            advice: labels[x].clone(),
            degree: tree.degree(x),
            depth,
            parent: link,
            children: Vec::new(),
        });
        if depth == radius {
            continue;
        }
        for (port, &(y, back)) in tree.neighbors(x).iter().enumerate().rev() {
            if Some(y) != from {
                let l = BallLink { node: idx, port_at_parent: port, port_at_child: back };
                stack.push((y, Some(x), Some(l), depth + 1));
            }
        }
    }
    (LabeledBall { radius, nodes }, ids)
}

pub fn balls_equal(a: &LabeledBall, b: &LabeledBall) -> Result<bool, BallError> {
    if a.radius != b.radius {
        return Err(BallError::RadiusMismatch(a.radius, b.radius));
    }
    Ok(a == b)
}

impl LabeledBall {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &BallNode {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[BallNode] {
        &self.nodes
    }

    pub fn advice(&self, i: usize) -> &AdviceString {
        &self.nodes[i].advice
    }

    pub fn degree(&self, i: usize) -> usize {
        self.nodes[i].degree
    }

    pub fn depth(&self, i: usize) -> usize {
        self.nodes[i].depth
    }

    /// True when some of the node's edges may leave the ball.
    pub fn is_frontier(&self, i: usize) -> bool {
        self.nodes[i].depth == self.radius
    }

    /// Ball node reached from `i` through `port`, if it lies inside the ball.
    pub fn neighbor(&self, i: usize, port: Port) -> Option<usize> {
        let n = &self.nodes[i];
        if let Some(l) = n.parent {
            if l.port_at_child == port {
                return Some(l.node);
            }
        }
        n.children
            .binary_search_by_key(&port, |&c| self.nodes[c].parent.unwrap().port_at_parent)
            .ok()
            .map(|k| n.children[k])
    }

    /// All ball neighbors of `i` with the port used at `i`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (Port, usize)> + '_ {
        let n = &self.nodes[i];
        n.parent
            .map(|l| (l.port_at_child, l.node))
            .into_iter()
            .chain(n.children.iter().map(move |&c| (self.nodes[c].parent.unwrap().port_at_parent, c)))
    }

    /// Port at `i` of the edge to the adjacent ball node `j`.
    pub fn port_between(&self, i: usize, j: usize) -> Port {
        let ni = &self.nodes[i];
        let nj = &self.nodes[j];
        match (ni.parent, nj.parent) {
            (Some(l), _) if l.node == j => l.port_at_child,
            (_, Some(l)) if l.node == i => l.port_at_parent,
            _ => panic!("ball nodes {i} and {j} are not adjacent"),
        }
    }

    /// Ball nodes on the path from `i` to `j`, both included.
    pub fn path(&self, i: usize, j: usize) -> Vec<usize> {
        let (mut a, mut b) = (i, j);
        let mut up = vec![a];
        let mut down = vec![b];
        while self.nodes[a].depth > self.nodes[b].depth {
            a = self.nodes[a].parent.unwrap().node;
            up.push(a);
        }
        while self.nodes[b].depth > self.nodes[a].depth {
            b = self.nodes[b].parent.unwrap().node;
            down.push(b);
        }
        while a != b {
            a = self.nodes[a].parent.unwrap().node;
            b = self.nodes[b].parent.unwrap().node;
            up.push(a);
            down.push(b);
        }
        down.pop();
        up.extend(down.into_iter().rev());
        up
    }

    /// Ports leaving each node along a walk of adjacent ball nodes.
    pub fn ports_along(&self, walk: &[usize]) -> PathCode {
        walk.windows(2).map(|w| self.port_between(w[0], w[1])).collect()
    }

    pub fn path_code(&self, i: usize, j: usize) -> PathCode {
        self.ports_along(&self.path(i, j))
    }

    /// Copy of the ball with every advice string replaced by `f(advice)`.
    pub fn map_advice(&self, mut f: impl FnMut(&AdviceString) -> AdviceString) -> LabeledBall {
        LabeledBall {
            radius: self.radius,
            nodes: self
                .nodes
                .iter()
                .map(|n| BallNode { advice: f(&n.advice), ..n.clone() })
                .collect(),
        }
    }

    /// Canonical token stream: preorder, each node as its advice, degree and
    /// child count, each child preceded by the two ports of its edge.
    pub fn serialize(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.serialize_into(0, &mut out);
        out
    }

    fn serialize_into(&self, i: usize, out: &mut Vec<usize>) {
        let n = &self.nodes[i];
        out.push(n.advice.len());
        out.extend(n.advice.as_slice().iter().map(|&s| usize::from(s)));
        out.push(n.degree);
        out.push(n.children.len());
        for &c in &n.children {
            let l = self.nodes[c].parent.unwrap();
            out.push(l.port_at_parent);
            out.push(l.port_at_child);
            self.serialize_into(c, out);
        }
    }
}
