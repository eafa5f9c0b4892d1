//! Marks that cut a deep tree into regions of height `L = (k-2)·q`,
//! `q = ⌊τ/k⌋`.
//!
//! Leaves are processed deepest first; a leaf deeper than τ with no marked
//! ancestor closer than `L` marks its ancestor at distance exactly `L` blue
//! and becomes the next leaf to process. A processed blue node that caused a
//! new blue node above it turns green. Each blue or green node is the top of
//! a region: paths of length `L` down to a green node or a leaf are of the
//! first kind, shorter paths down to a blue node or a leaf of the second.
//! Reds sit every `q` steps on first-kind paths and blacks every `q` steps on
//! the rest of second-kind paths.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::tree_core::{diameter_and_center, NodeId, PortLabeledTree, Rooted};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mark {
    White,
    Blue,
    Green,
    Red,
    Black,
}

impl Mark {
    pub fn is_top(self) -> bool {
        matches!(self, Mark::Blue | Mark::Green)
    }
}

/// Where a node sits relative to the region containing it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Placement {
    /// Top of the region, `None` for nodes outside every region.
    pub top: Option<NodeId>,
    /// Distance below the top.
    pub offset: usize,
    /// Lies on a first-kind path of its region.
    pub first_kind: bool,
    /// Largest offset of a second-kind path end at or below the node.
    pub second_reach: Option<usize>,
    /// Some black node sits below at the next multiple of `q`, reached without
    /// passing an earlier stride.
    pub black_next: bool,
}

#[derive(Clone, Debug)]
pub struct Marking {
    pub k: usize,
    pub q: usize,
    pub segment: usize,
    pub tau: usize,
    pub rooted: Rooted,
    pub children: Vec<Vec<NodeId>>,
    pub marks: Vec<Option<Mark>>,
    /// Per node as a region member; tops get their own region's view in `top_view`.
    pub placement: Vec<Placement>,
    pub top_view: Vec<Placement>,
}

impl Marking {
    pub fn mark(&self, v: NodeId) -> Option<Mark> {
        self.marks[v]
    }

    pub fn tops(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.marks.len()).filter(|&v| self.marks[v].is_some_and(Mark::is_top))
    }

    /// Largest offset of any path end usable from `view` downwards.
    pub fn reach(&self, view: &Placement) -> Option<usize> {
        if view.first_kind {
            Some(self.segment)
        } else {
            view.second_reach
        }
    }

    /// Nodes deeper than τ whose closest top ancestor is more than `L` above,
    /// or missing. Empty whenever the construction behaves as intended.
    pub fn coverage_violations(&self) -> Vec<NodeId> {
        (0..self.marks.len())
            .filter(|&v| self.rooted.depth[v] > self.tau)
            .filter(|&v| {
                let mut x = v;
                for _ in 0..=self.segment {
                    if self.marks[x].is_some_and(Mark::is_top) {
                        return false;
                    }
                    match self.rooted.parent(x) {
                        Some(p) => x = p,
                        None => return true,
                    }
                }
                true
            })
            .collect()
    }
}

/// Rank of every node in preorder from the root with children by port, which
/// orders equal-depth nodes by their root-down port sequences.
fn preorder_rank(rooted: &Rooted, children: &[Vec<NodeId>]) -> Vec<usize> {
    let mut rank = vec![0; children.len()];
    let mut stack = vec![rooted.root];
    let mut next = 0;
    while let Some(x) = stack.pop() {
        rank[x] = next;
        next += 1;
        for &c in children[x].iter().rev() {
            stack.push(c);
        }
    }
    rank
}

pub fn mark_nodes(tree: &PortLabeledTree, tau: usize, k: usize) -> Marking {
    assert!(k >= 4, "k must exceed 3");
    let q = tau / k;
    let segment = (k - 2) * q;
    assert!(segment >= 1, "τ too small for k = {k}");
    let root = diameter_and_center(tree).root;
    let rooted = Rooted::new(tree, root);
    let children = rooted.children(tree);
    let n = tree.node_count();
    let rank = preorder_rank(&rooted, &children);
    let mut marks: Vec<Option<Mark>> = vec![None; n];
    marks[root] = Some(Mark::White);

    let mut queued = vec![false; n];
    let mut heap = BinaryHeap::new();
    for v in 0..n {
        if tree.degree(v) <= 1 {
            queued[v] = true;
            heap.push((rooted.depth[v], Reverse(rank[v]), v));
        }
    }
    while let Some((depth, _, v)) = heap.pop() {
        if depth <= tau {
            continue;
        }
        let mut x = v;
        let mut blocked = false;
        for _ in 1..segment {
            x = rooted.parent(x).unwrap();
            if marks[x].is_some_and(Mark::is_top) {
                blocked = true;
                break;
            }
        }
        if blocked {
            continue;
        }
        let u = rooted.ancestor(v, segment);
        marks[u] = Some(Mark::Blue);
        if tree.degree(v) > 1 {
            marks[v] = Some(Mark::Green);
        }
        if !queued[u] {
            queued[u] = true;
            heap.push((rooted.depth[u], Reverse(rank[u]), u));
        }
    }

    let mut marking = Marking {
        k,
        q,
        segment,
        tau,
        rooted,
        children,
        marks,
        placement: vec![Placement::default(); n],
        top_view: vec![Placement::default(); n],
    };
    let tops: Vec<NodeId> = marking.tops().collect();
    for &u in &tops {
        analyse_region(&mut marking, tree, u);
    }
    for &u in &tops {
        place_strides(&mut marking, u);
    }
    for &u in &tops {
        link_blacks(&mut marking, u);
    }
    marking
}

/// Region members of `u` in preorder, with their offsets.
fn region_members(m: &Marking, u: NodeId) -> Vec<(NodeId, usize)> {
    let mut out = Vec::new();
    let mut stack: Vec<(NodeId, usize)> = m.children[u].iter().rev().map(|&c| (c, 1)).collect();
    while let Some((x, o)) = stack.pop() {
        if m.marks[x].is_some_and(Mark::is_top) {
            continue;
        }
        out.push((x, o));
        if o < m.segment {
            for &c in m.children[x].iter().rev() {
                stack.push((c, o + 1));
            }
        }
    }
    out
}

fn analyse_region(m: &mut Marking, tree: &PortLabeledTree, u: NodeId) {
    let members = region_members(m, u);
    for &(x, o) in &members {
        m.placement[x] = Placement { top: Some(u), offset: o, ..Placement::default() };
    }
    let segment = m.segment;
    let is_top = |marks: &[Option<Mark>], x: NodeId| marks[x].is_some_and(Mark::is_top);
    // children before parents
    for &(x, o) in members.iter().rev() {
        let mut first = false;
        let mut reach: Option<usize> = None;
        if o == segment {
            first = tree.degree(x) == 1;
        } else if tree.degree(x) == 1 {
            reach = Some(o);
        } else {
            for &c in &m.children[x] {
                if is_top(&m.marks, c) {
                    if o + 1 == segment {
                        first |= m.marks[c] == Some(Mark::Green);
                    } else {
                        reach = reach.max(Some(o + 1));
                    }
                } else {
                    first |= m.placement[c].first_kind;
                    reach = reach.max(m.placement[c].second_reach);
                }
            }
        }
        m.placement[x].first_kind = first;
        m.placement[x].second_reach = reach;
    }
    let mut view = Placement { top: Some(u), offset: 0, ..Placement::default() };
    for &c in &m.children[u] {
        if is_top(&m.marks, c) {
            if segment == 1 {
                view.first_kind |= m.marks[c] == Some(Mark::Green);
            } else {
                view.second_reach = view.second_reach.max(Some(1));
            }
        } else {
            view.first_kind |= m.placement[c].first_kind;
            view.second_reach = view.second_reach.max(m.placement[c].second_reach);
        }
    }
    m.top_view[u] = view;
}

fn place_strides(m: &mut Marking, u: NodeId) {
    let (q, k) = (m.q, m.k);
    for (x, o) in region_members(m, u) {
        if o % q != 0 || o >= m.segment {
            continue;
        }
        let p = m.placement[x];
        if p.first_kind && o / q <= k - 3 {
            m.marks[x] = Some(Mark::Red);
        } else if p.second_reach.is_some_and(|e| e >= o + 2 * k + 10) {
            m.marks[x] = Some(Mark::Black);
        }
    }
}

fn link_blacks(m: &mut Marking, u: NodeId) {
    let q = m.q;
    let members = region_members(m, u);
    for &(x, o) in members.iter().rev() {
        let next_stride = (o / q + 1) * q;
        let found = m.children[x].iter().any(|&c| {
            let pc = m.placement[c];
            pc.top == Some(u)
                && ((pc.offset == next_stride && m.marks[c] == Some(Mark::Black))
                    || (pc.offset < next_stride && pc.black_next))
        });
        m.placement[x].black_next = found;
    }
}
