use std::cmp::Ordering;
use std::collections::VecDeque;

use super::advice::AdviceString;
use super::ball::extract_ball_labeled;
use super::path::PathCode;
use super::tree::{NodeId, Port, PortLabeledTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Center {
    Node(NodeId),
    Edge(NodeId, NodeId),
}

/// Diameter, center and the canonical root every scheme elects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CenterInfo {
    pub diameter: usize,
    pub center: Center,
    pub root: NodeId,
}

pub fn bfs_distances(tree: &PortLabeledTree, source: NodeId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; tree.node_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in tree.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

fn farthest(dist: &[usize]) -> NodeId {
    (0..dist.len()).max_by_key(|&v| (dist[v], std::cmp::Reverse(v))).unwrap()
}

pub fn diameter_and_center(tree: &PortLabeledTree) -> CenterInfo {
    let a = farthest(&bfs_distances(tree, 0));
    let from_a = Rooted::new(tree, a);
    let b = farthest(&from_a.depth);
    let diameter = from_a.depth[b];
    // walk up from b towards a
    let mut mid = b;
    for _ in 0..diameter / 2 {
        mid = from_a.parent(mid).unwrap();
    }
    if diameter % 2 == 0 {
        return CenterInfo { diameter, center: Center::Node(mid), root: mid };
    }
    let other = from_a.parent(mid).unwrap();
    let root = break_edge_tie(tree, mid, other, diameter);
    CenterInfo { diameter, center: Center::Edge(mid.min(other), mid.max(other)), root }
}

/// Equal for two trees exactly when some bijection of nodes preserves every
/// edge together with both of its port numbers.
pub fn canonical_form(tree: &PortLabeledTree) -> Vec<usize> {
    let blank = vec![AdviceString::empty(); tree.node_count()];
    let from = |v: NodeId| extract_ball_labeled(tree, &blank, v, tree.node_count()).serialize();
    match diameter_and_center(tree).center {
        Center::Node(c) => from(c),
        Center::Edge(a, b) => from(a).min(from(b)),
    }
}

/// Picks an endpoint of the central edge: smaller radius-1 ball under empty
/// advice, then the smaller port on the edge, then larger balls, then the id.
fn break_edge_tie(tree: &PortLabeledTree, x: NodeId, y: NodeId, diameter: usize) -> NodeId {
    let blank = vec![AdviceString::empty(); tree.node_count()];
    let key = |v: NodeId, r: usize| extract_ball_labeled(tree, &blank, v, r).serialize();
    let decided = |ord: Ordering| match ord {
        Ordering::Less => Some(x),
        Ordering::Greater => Some(y),
        Ordering::Equal => None,
    };
    if let Some(r) = decided(key(x, 1).cmp(&key(y, 1))) {
        return r;
    }
    let px = tree.port_towards(x, y).unwrap();
    let py = tree.port_towards(y, x).unwrap();
    if let Some(r) = decided(px.cmp(&py)) {
        return r;
    }
    for radius in 2..=diameter {
        if let Some(r) = decided(key(x, radius).cmp(&key(y, radius))) {
            return r;
        }
    }
    x.min(y)
}

/// The tree hung from a root: parents, depths and the ports on parent edges.
#[derive(Clone, Debug)]
pub struct Rooted {
    pub root: NodeId,
    pub depth: Vec<usize>,
    /// `(parent, port at the node towards its parent, port at the parent towards the node)`
    pub up: Vec<Option<(NodeId, Port, Port)>>,
    /// Breadth-first order from the root.
    pub order: Vec<NodeId>,
}

impl Rooted {
    pub fn new(tree: &PortLabeledTree, root: NodeId) -> Self {
        let n = tree.node_count();
        let mut depth = vec![usize::MAX; n];
        let mut up = vec![None; n];
        let mut order = Vec::with_capacity(n);
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for (port, &(y, back)) in tree.neighbors(x).iter().enumerate() {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    up[y] = Some((x, back, port));
                    queue.push_back(y);
                }
            }
        }
        Rooted { root, depth, up, order }
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.up[v].map(|(p, _, _)| p)
    }

    pub fn ancestor(&self, mut v: NodeId, distance: usize) -> NodeId {
        for _ in 0..distance {
            v = self.parent(v).expect("ancestor above the root");
        }
        v
    }

    /// Ports from `v` up to the root.
    pub fn ports_to_root(&self, mut v: NodeId) -> PathCode {
        let mut out = Vec::with_capacity(self.depth[v]);
        while let Some((p, port, _)) = self.up[v] {
            out.push(port);
            v = p;
        }
        out
    }

    /// Ports from `v` up to its ancestor `a`.
    pub fn ports_to_ancestor(&self, mut v: NodeId, a: NodeId) -> PathCode {
        let mut out = Vec::new();
        while v != a {
            let (p, port, _) = self.up[v].expect("not an ancestor");
            out.push(port);
            v = p;
        }
        out
    }

    /// Children of every node, ordered by the port at the parent.
    pub fn children(&self, tree: &PortLabeledTree) -> Vec<Vec<NodeId>> {
        let mut out = vec![Vec::new(); tree.node_count()];
        for (x, row) in out.iter_mut().enumerate() {
            for &(y, _) in tree.neighbors(x) {
                if self.parent(y) == Some(x) {
                    row.push(y);
                }
            }
        }
        out
    }

    /// Largest depth reached inside the subtree of each node.
    pub fn deepest_below(&self) -> Vec<usize> {
        let mut best = self.depth.clone();
        for &x in self.order.iter().rev() {
            if let Some(p) = self.parent(x) {
                best[p] = best[p].max(best[x]);
            }
        }
        best
    }

    pub fn is_ancestor(&self, a: NodeId, mut v: NodeId) -> bool {
        while self.depth[v] > self.depth[a] {
            v = self.parent(v).unwrap();
        }
        v == a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::path::{follow_path, path_ports};
    use crate::tree_core::tree::{build_tree, Edge};

    fn line(n: usize) -> PortLabeledTree {
        let edges: Vec<Edge> = (0..n - 1).map(|i| Edge::new(i, if i == 0 { 0 } else { 1 }, i + 1, 0)).collect();
        build_tree(&edges).unwrap()
    }

    #[test]
    fn single_node_and_pair() {
        let one = PortLabeledTree::single_node();
        let c = diameter_and_center(&one);
        assert_eq!((c.diameter, c.root), (0, 0));
        let two = line(2);
        let c = diameter_and_center(&two);
        assert_eq!(c.diameter, 1);
        assert_eq!(c.center, Center::Edge(0, 1));
    }

    #[test]
    fn even_path_has_middle_root() {
        let c = diameter_and_center(&line(5));
        assert_eq!(c, CenterInfo { diameter: 4, center: Center::Node(2), root: 2 });
    }

    #[test]
    fn odd_diameter_breaks_ties_by_ball() {
        // 0-1-2-3 with an extra leaf on node 2: node 2 has degree 3, node 1 degree 2
        let t = build_tree(&[
            Edge::new(0, 0, 1, 0),
            Edge::new(1, 1, 2, 0),
            Edge::new(2, 1, 3, 0),
            Edge::new(2, 2, 4, 0),
        ])
        .unwrap();
        let c = diameter_and_center(&t);
        assert_eq!(c.diameter, 3);
        assert_eq!(c.center, Center::Edge(1, 2));
        // radius-1 serializations start (0, degree, ...): degree 2 < degree 3
        assert_eq!(c.root, 1);
    }

    #[test]
    fn rooted_ports_match_path_ports() {
        let t = line(6);
        let r = Rooted::new(&t, 2);
        for v in 0..6 {
            assert_eq!(r.ports_to_root(v), path_ports(&t, v, 2));
            assert_eq!(follow_path(&t, v, &r.ports_to_root(v)), Ok(2));
        }
        assert_eq!(r.deepest_below()[2], 3);
        assert!(r.is_ancestor(3, 5));
        assert!(!r.is_ancestor(3, 1));
    }

    #[test]
    fn canonical_form_ignores_ids_but_not_ports() {
        let t = line(6);
        let mut perm: Vec<NodeId> = (0..6).collect();
        perm.reverse();
        assert_eq!(canonical_form(&t), canonical_form(&t.relabel(&perm)));
        let mut swapped = t.clone();
        swapped.swap_ports(2, 0, 1);
        assert_ne!(canonical_form(&t), canonical_form(&swapped));
    }
}
