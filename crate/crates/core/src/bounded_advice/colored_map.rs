//! Advice = own color followed by a binary description of the whole colored
//! tree. The map part is identical everywhere, so the number of distinct
//! strings equals the number of colors used.
//!
//! A node finds the map positions whose colored radius-τ ball equals its
//! own and outputs their common path to the map's root.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::codec::{decode_sequence, encode_sequence};
use crate::election::{ElectError, Elector};
use crate::tree_core::{
    ball_classes, diameter_and_center, extract_ball_labeled, AdviceAssignment, AdviceString, Edge, LabeledBall,
    NodeId, PathCode, PortLabeledTree, Rooted,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoredMapError {
    #[error("nodes {a} and {b} see equal colored balls but have different paths to the root")]
    IdentificationFailure { a: NodeId, b: NodeId },
    #[error("coloring has {got} entries for {nodes} nodes")]
    LengthMismatch { got: usize, nodes: usize },
    #[error("color {color} outside an alphabet of size {lambda}")]
    ColorOutOfRange { color: u8, lambda: usize },
}

/// A colored tree with a designated root, as the elector reconstructs it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredMap {
    pub tree: PortLabeledTree,
    pub colors: Vec<u8>,
    pub root: NodeId,
}

impl ColoredMap {
    /// Preorder from the root: color and child count per node, each child
    /// preceded by the port at the parent and the port at the child.
    pub fn serialize(&self) -> Vec<usize> {
        let rooted = Rooted::new(&self.tree, self.root);
        let children = rooted.children(&self.tree);
        let mut out = vec![self.tree.node_count()];
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            out.push(usize::from(self.colors[x]));
            out.push(children[x].len());
            for &c in children[x].iter().rev() {
                stack.push(c);
            }
        }
        // ports are appended in a second pass keyed by the same preorder
        let mut ports = Vec::with_capacity(2 * self.tree.node_count());
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            for &c in &children[x] {
                let (_, at_child, at_parent) = rooted.up[c].unwrap();
                ports.push(at_parent);
                ports.push(at_child);
            }
            for &c in children[x].iter().rev() {
                stack.push(c);
            }
        }
        out.extend(ports);
        out
    }

    pub fn deserialize(seq: &[usize]) -> Option<ColoredMap> {
        let n = *seq.first()?;
        if n == 0 || seq.len() != 1 + 2 * n + 2 * (n - 1) {
            return None;
        }
        let shape = &seq[1..1 + 2 * n];
        let ports = &seq[1 + 2 * n..];
        // rebuild preorder: node i has color shape[2i] and shape[2i+1] children
        let mut colors = Vec::with_capacity(n);
        let mut parent_of: Vec<Option<NodeId>> = vec![None; n];
        let mut child_lists: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        let mut open: Vec<(NodeId, usize)> = Vec::new();
        for i in 0..n {
            let color = u8::try_from(shape[2 * i]).ok()?;
            colors.push(color);
            if i > 0 {
                let (p, left) = open.last_mut()?;
                let p = *p;
                *left -= 1;
                if *left == 0 {
                    open.pop();
                }
                parent_of[i] = Some(p);
                child_lists[p].push(i);
            }
            if shape[2 * i + 1] > 0 {
                open.push((i, shape[2 * i + 1]));
            }
        }
        if !open.is_empty() {
            return None;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut next_port = 0;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &c in &child_lists[x] {
                edges.push(Edge::new(x, ports[next_port], c, ports[next_port + 1]));
                next_port += 2;
            }
            for &c in child_lists[x].iter().rev() {
                stack.push(c);
            }
        }
        let tree = PortLabeledTree::from_edges(n, &edges).ok()?;
        Some(ColoredMap { tree, colors, root: 0 })
    }
}

fn color_labels(colors: &[u8]) -> Vec<AdviceString> {
    let table: Vec<AdviceString> = (0..=255u8).map(AdviceString::symbol).collect();
    colors.iter().map(|&c| table[usize::from(c)].clone()).collect()
}

/// Checks that every node can be located, then builds the advice.
pub fn colored_map_advice(
    tree: &PortLabeledTree,
    colors: &[u8],
    tau: usize,
    lambda: usize,
) -> Result<AdviceAssignment, ColoredMapError> {
    let n = tree.node_count();
    if colors.len() != n {
        return Err(ColoredMapError::LengthMismatch { got: colors.len(), nodes: n });
    }
    if let Some(&color) = colors.iter().find(|&&c| usize::from(c) >= lambda) {
        return Err(ColoredMapError::ColorOutOfRange { color, lambda });
    }
    let root = diameter_and_center(tree).root;
    let rooted = Rooted::new(tree, root);
    let class_of = ball_classes(tree, colors, tau);
    let mut first: HashMap<u32, NodeId> = HashMap::new();
    for v in 0..n {
        let u = *first.entry(class_of[v]).or_insert(v);
        if rooted.ports_to_root(u) != rooted.ports_to_root(v) {
            return Err(ColoredMapError::IdentificationFailure { a: u, b: v });
        }
    }
    let map = ColoredMap { tree: tree.clone(), colors: colors.to_vec(), root };
    let code = encode_sequence(&map.serialize(), 2).unwrap();
    // one shared buffer per color
    let mut per_color: HashMap<u8, AdviceString> = HashMap::new();
    let strings = colors
        .iter()
        .map(|&c| {
            per_color
                .entry(c)
                .or_insert_with(|| {
                    let mut s = Vec::with_capacity(code.len() + 1);
                    s.push(c);
                    s.extend_from_slice(&code);
                    AdviceString::new(s)
                })
                .clone()
        })
        .collect();
    Ok(AdviceAssignment::new(lambda, strings).unwrap())
}

/// Lookup table from colored balls of one radius to root paths.
pub struct ColoredMapIndex {
    map: ColoredMap,
    labels: Vec<AdviceString>,
    radius: usize,
    rooted: Rooted,
    by_hash: HashMap<u64, Vec<NodeId>>,
}

fn ball_hash(ball: &LabeledBall) -> u64 {
    let mut h = DefaultHasher::new();
    ball.hash(&mut h);
    h.finish()
}

impl ColoredMapIndex {
    pub fn new(map: ColoredMap, radius: usize) -> Self {
        let labels = color_labels(&map.colors);
        let rooted = Rooted::new(&map.tree, map.root);
        let mut by_hash: HashMap<u64, Vec<NodeId>> = HashMap::new();
        for u in 0..map.tree.node_count() {
            let ball = extract_ball_labeled(&map.tree, &labels, u, radius);
            by_hash.entry(ball_hash(&ball)).or_default().push(u);
        }
        ColoredMapIndex { map, labels, radius, rooted, by_hash }
    }

    pub fn from_advice(advice: &AdviceString, radius: usize) -> Result<Self, ElectError> {
        let body = advice.as_slice().get(1..).unwrap_or(&[]);
        let seq = decode_sequence(body, 2)?;
        let map = ColoredMap::deserialize(&seq).ok_or_else(|| ElectError::Malformed("bad map".into()))?;
        Ok(Self::new(map, radius))
    }

    pub fn map(&self) -> &ColoredMap {
        &self.map
    }

    /// `ball` must already carry one color symbol per node.
    pub fn locate(&self, ball: &LabeledBall) -> Result<PathCode, ElectError> {
        if ball.radius() != self.radius {
            return Err(ElectError::Malformed("radius differs from the index".into()));
        }
        let mut answer: Option<PathCode> = None;
        for &u in self.by_hash.get(&ball_hash(ball)).into_iter().flatten() {
            if extract_ball_labeled(&self.map.tree, &self.labels, u, self.radius) != *ball {
                continue;
            }
            let path = self.rooted.ports_to_root(u);
            match &answer {
                None => answer = Some(path),
                Some(p) if *p == path => {}
                Some(_) => return Err(ElectError::Ambiguous),
            }
        }
        answer.ok_or(ElectError::IdentificationFailure)
    }
}

/// First symbol of each advice string, which is the node's color.
pub fn colors_only(ball: &LabeledBall) -> LabeledBall {
    ball.map_advice(|a| AdviceString::symbol(a.first().unwrap_or(0)))
}

/// Stateless election: decodes the map from the node's own advice.
pub fn elect_colored_map(ball: &LabeledBall) -> Result<PathCode, ElectError> {
    let index = ColoredMapIndex::from_advice(ball.advice(0), ball.radius())?;
    index.locate(&colors_only(ball))
}

/// Same decisions as [`elect_colored_map`], but each distinct map is decoded
/// and indexed once.
#[derive(Default)]
pub struct ColoredMapElector {
    cache: Mutex<HashMap<(Vec<u8>, usize), Arc<ColoredMapIndex>>>,
}

impl ColoredMapElector {
    pub fn new() -> Self {
        Self::default()
    }

    fn index_for(&self, advice: &AdviceString, radius: usize) -> Result<Arc<ColoredMapIndex>, ElectError> {
        let key = (advice.as_slice().get(1..).unwrap_or(&[]).to_vec(), radius);
        if let Some(found) = self.cache.lock().unwrap().get(&key) {
            return Ok(found.clone());
        }
        let built = Arc::new(ColoredMapIndex::from_advice(advice, radius)?);
        self.cache.lock().unwrap().insert(key, built.clone());
        Ok(built)
    }
}

impl Elector for ColoredMapElector {
    fn elect(&self, ball: &LabeledBall) -> Result<PathCode, ElectError> {
        self.index_for(ball.advice(0), ball.radius())?.locate(&colors_only(ball))
    }
}
