//! Seeded random trees with uniformly shuffled port numbers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::tree_core::{Edge, NodeId, PortLabeledTree};

/// Assigns each node a uniformly random port order over its neighbors.
pub fn shuffle_ports<R: Rng + ?Sized>(n: usize, pairs: &[(NodeId, NodeId)], rng: &mut R) -> PortLabeledTree {
    let mut around: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    for &(a, b) in pairs {
        around[a].push(b);
        around[b].push(a);
    }
    for row in &mut around {
        row.shuffle(rng);
    }
    with_port_order(&around)
}

/// `around[v]` lists the neighbors of `v` in port order.
pub fn with_port_order(around: &[Vec<NodeId>]) -> PortLabeledTree {
    let n = around.len();
    if n == 1 {
        return PortLabeledTree::single_node();
    }
    let mut edges = Vec::with_capacity(n - 1);
    for (a, row) in around.iter().enumerate() {
        for (pa, &b) in row.iter().enumerate() {
            if a < b {
                let pb = around[b].iter().position(|&x| x == a).unwrap();
                edges.push(Edge::new(a, pa, b, pb));
            }
        }
    }
    PortLabeledTree::from_edges(n, &edges).expect("neighbor lists describe a tree")
}

/// Uniform labeled tree on `n` nodes via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PortLabeledTree {
    assert!(n >= 1);
    if n == 1 {
        return PortLabeledTree::single_node();
    }
    if n == 2 {
        return shuffle_ports(2, &[(0, 1)], rng);
    }
    let code: Vec<NodeId> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut remaining = vec![1usize; n];
    for &x in &code {
        remaining[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<NodeId>> = (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut pairs = Vec::with_capacity(n - 1);
    for &x in &code {
        let Reverse(leaf) = leaves.pop().unwrap();
        pairs.push((leaf, x));
        remaining[x] -= 1;
        if remaining[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    pairs.push((a, b));
    shuffle_ports(n, &pairs, rng)
}

/// Random tree with exactly `n` nodes and diameter `diameter`.
///
/// A spine of `diameter + 1` nodes carries random hanging branches; a node at
/// spine position `i` may hang at most `min(i, diameter - i)` deep, so no
/// longer path appears.
pub fn random_tree_with_diameter<R: Rng + ?Sized>(n: usize, diameter: usize, rng: &mut R) -> PortLabeledTree {
    assert!(diameter < n, "a diameter of {diameter} needs more than {n} nodes");
    assert!(diameter >= 2 || n == diameter + 1, "no tree with {n} nodes has diameter {diameter}");
    let mut pairs: Vec<(NodeId, NodeId)> = (0..diameter).map(|i| (i, i + 1)).collect();
    // (spine position, hanging depth) per node
    let mut place: Vec<(usize, usize)> = (0..=diameter).map(|i| (i, 0)).collect();
    let mut open: Vec<NodeId> = (1..diameter).collect();
    for v in diameter + 1..n {
        let k = rng.random_range(0..open.len());
        let parent = open[k];
        let (i, depth) = place[parent];
        pairs.push((parent, v));
        place.push((i, depth + 1));
        if depth + 1 < i.min(diameter - i) {
            open.push(v);
        }
    }
    shuffle_ports(n, &pairs, rng)
}

/// Parameters of [`deep_tree`].
#[derive(Clone, Debug, Default)]
pub struct DeepShape {
    /// Both main arms end exactly this deep; no leaf is deeper.
    pub depth: usize,
    /// Extra paths hung from uniformly chosen nodes.
    pub branches: usize,
    /// Branch lengths are drawn from `1..=max_branch`, cut at `depth`.
    pub max_branch: usize,
    /// `(fork depth, leaf depth)`: a path leaving a random main arm at the
    /// first depth and ending at the second.
    pub forks: Vec<(usize, usize)>,
}

/// Two arms of equal length from node 0, which is therefore the center, plus
/// random hanging paths. The port from any node towards node 0 is 0 or 1, so
/// root paths cost two symbols per step to encode in binary.
pub fn deep_tree<R: Rng + ?Sized>(shape: &DeepShape, rng: &mut R) -> PortLabeledTree {
    assert!(shape.depth >= 1, "arms need at least one edge");
    let mut parent: Vec<Option<NodeId>> = vec![None];
    let mut depth = vec![0usize];
    let grow = |from: NodeId, len: usize, parent: &mut Vec<Option<NodeId>>, depth: &mut Vec<usize>| {
        let mut at = from;
        for _ in 0..len {
            parent.push(Some(at));
            depth.push(depth[at] + 1);
            at = parent.len() - 1;
        }
    };
    grow(0, shape.depth, &mut parent, &mut depth);
    grow(0, shape.depth, &mut parent, &mut depth);
    for &(at, leaf) in &shape.forks {
        assert!(at >= 1 && at < leaf && leaf <= shape.depth, "fork ({at}, {leaf}) does not fit");
        // arm nodes sit at ids 1..=depth and depth+1..=2·depth
        let from = if rng.random_bool(0.5) { at } else { shape.depth + at };
        grow(from, leaf - at, &mut parent, &mut depth);
    }
    for _ in 0..shape.branches {
        let from = rng.random_range(1..parent.len());
        let room = shape.depth - depth[from];
        if room == 0 {
            continue;
        }
        let len = rng.random_range(1..=shape.max_branch.max(1)).min(room);
        grow(from, len, &mut parent, &mut depth);
    }
    let n = parent.len();
    let mut children: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    for v in 1..n {
        children[parent[v].unwrap()].push(v);
    }
    let around: Vec<Vec<NodeId>> = (0..n)
        .map(|v| {
            let mut row = children[v].clone();
            row.shuffle(rng);
            if let Some(p) = parent[v] {
                let slot = if row.is_empty() { 0 } else { rng.random_range(0..2) };
                row.insert(slot, p);
            }
            row
        })
        .collect();
    with_port_order(&around)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::diameter_and_center;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prufer_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..60 {
            assert_eq!(random_tree(n, &mut rng).node_count(), n);
        }
    }

    #[test]
    fn deep_tree_is_centered_with_small_up_ports() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let t = deep_tree(&DeepShape { depth: 40, branches: 30, max_branch: 25, forks: vec![(3, 39)] }, &mut rng);
        let info = diameter_and_center(&t);
        assert_eq!(info.diameter, 80);
        assert_eq!(info.root, 0);
        let rooted = crate::tree_core::Rooted::new(&t, 0);
        for v in 1..t.node_count() {
            assert!(rooted.ports_to_root(v)[0] <= 1);
        }
    }

    #[test]
    fn prescribed_diameter_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (n, d) in [(10, 2), (30, 7), (100, 13), (50, 49), (2, 1), (1, 0)] {
            let t = random_tree_with_diameter(n, d, &mut rng);
            assert_eq!(t.node_count(), n);
            assert_eq!(diameter_and_center(&t).diameter, d);
        }
    }
}
