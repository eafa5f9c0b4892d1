//! Binary advice that works for every election time τ.
//!
//! Three regimes. When the root is visible from everyone (or `D ≤ 2`) the
//! root alone gets `1`. With `τ ≤ 1` every node simply stores its encoded
//! path to the root. Otherwise nodes store a depth class mod 3 (so a node can
//! tell its parent from its children), a flag on depths `k·h` with
//! `h = ⌊τ/2⌋`, a flag on deep nodes, and a piece of some ancestor's root
//! path: the `h` nodes of a segment between two flagged depths jointly spell
//! the path of the segment's top (or of its ancestor at depth `⌈D/2⌉ - τ`).

use crate::codec::{decode_sequence, encode_sequence, pack_record, unpack_record, PackedRecord};
use crate::election::{ElectError, Elector};
use crate::tree_core::{
    diameter_and_center, AdviceAssignment, AdviceString, LabeledBall, NodeId, PathCode, PortLabeledTree, Rooted,
};

pub fn advice_unbounded(tree: &PortLabeledTree, tau: usize) -> AdviceAssignment {
    let info = diameter_and_center(tree);
    let n = tree.node_count();
    let half = info.diameter.div_ceil(2);
    if info.diameter <= 2 || tau >= half {
        let zero = AdviceString::symbol(0);
        let strings = (0..n)
            .map(|v| if v == info.root { AdviceString::symbol(1) } else { zero.clone() })
            .collect();
        return AdviceAssignment::new(2, strings).unwrap();
    }
    let rooted = Rooted::new(tree, info.root);
    let encode = |v: NodeId| encode_sequence(&rooted.ports_to_root(v), 2).unwrap();
    if tau <= 1 {
        let strings = (0..n).map(|v| AdviceString::new(pack_record(0, 0, 0, &encode(v)))).collect();
        return AdviceAssignment::new(2, strings).unwrap();
    }

    let h = tau / 2;
    let threshold = half - tau;
    let deepest = rooted.deepest_below();
    // segment top of each node on a complete segment, found top-down
    let mut top: Vec<Option<NodeId>> = vec![None; n];
    let mut spelled: Vec<Option<Vec<u8>>> = vec![None; n];
    let mut piece: Vec<Vec<u8>> = vec![vec![0]; n];
    for &y in &rooted.order {
        let d = rooted.depth[y];
        if d < h {
            continue;
        }
        let (k, j) = (d / h, d % h);
        if deepest[y] < (k + 1) * h {
            continue;
        }
        let x = if j == 0 { y } else { top[rooted.parent(y).unwrap()].unwrap() };
        top[y] = Some(x);
        let s = spelled[x].get_or_insert_with(|| {
            let w = if rooted.depth[x] < threshold {
                x
            } else {
                rooted.ancestor(x, rooted.depth[x] - threshold)
            };
            encode(w)
        });
        piece[y] = split_pieces(s, h)[h - j - 1].to_vec();
    }
    let strings = (0..n)
        .map(|v| {
            let d = rooted.depth[v];
            let m1 = if v == info.root { 3 } else { ((d - 1) % 3) as u8 };
            let m2 = u8::from(d >= h && d % h == 0);
            let m3 = u8::from(d >= threshold);
            AdviceString::new(pack_record(m1, m2, m3, &piece[v]))
        })
        .collect();
    AdviceAssignment::new(2, strings).unwrap()
}

/// `h` consecutive pieces whose lengths differ by at most one, longer ones first.
pub fn split_pieces(s: &[u8], h: usize) -> Vec<&[u8]> {
    let (base, extra) = (s.len() / h, s.len() % h);
    let mut out = Vec::with_capacity(h);
    let mut at = 0;
    for i in 0..h {
        let len = base + usize::from(i < extra);
        out.push(&s[at..at + len]);
        at += len;
    }
    out
}

pub fn elect_unbounded(ball: &LabeledBall) -> Result<PathCode, ElectError> {
    let tau = ball.radius();
    let own = ball.advice(0);
    if own.len() == 1 {
        return elect_single_symbol(ball);
    }
    let record = |i: usize| unpack_record(ball.advice(i).as_slice());
    if tau <= 1 {
        return Ok(decode_sequence(&record(0)?.piece, 2)?);
    }
    let records: Vec<PackedRecord> = (0..ball.len()).map(record).collect::<Result<_, _>>()?;
    if let Some(root) = (0..ball.len()).find(|&i| records[i].m1 == 3) {
        return Ok(ball.path_code(0, root));
    }
    // climb τ steps: the parent is the one neighbor one class lower mod 3
    let mut climb = vec![0usize];
    for _ in 0..tau {
        let at = *climb.last().unwrap();
        let want = (records[at].m1 + 2) % 3;
        let mut up = ball.neighbors(at).filter(|&(_, x)| records[x].m1 == want).map(|(_, x)| x);
        let parent = up.next().ok_or_else(|| ElectError::Malformed("no parent class".into()))?;
        if up.next().is_some() {
            return Err(ElectError::Malformed("two parents".into()));
        }
        climb.push(parent);
    }
    let h = tau / 2;
    let j = (0..=tau - h)
        .find(|&j| records[climb[j]].m2 == 1 && records[climb[j + h]].m2 == 1)
        .ok_or_else(|| ElectError::Malformed("no flagged segment on the climb".into()))?;
    let spelled: Vec<u8> = (j + 1..=j + h).flat_map(|i| records[climb[i]].piece.iter().copied()).collect();
    let tail = decode_sequence(&spelled, 2)?;
    let anchor = if records[climb[j + h]].m3 == 0 {
        j + h
    } else {
        (0..=tau).rev().find(|&i| records[climb[i]].m3 == 1).unwrap()
    };
    let mut out = ball.ports_along(&climb[..=anchor]);
    out.extend(tail);
    Ok(out)
}

fn elect_single_symbol(ball: &LabeledBall) -> Result<PathCode, ElectError> {
    let one = AdviceString::symbol(1);
    if let Some(root) = (0..ball.len()).find(|&i| *ball.advice(i) == one) {
        return Ok(ball.path_code(0, root));
    }
    // only reachable when the diameter is at most 2 and τ = 0: leaves point inwards
    if ball.degree(0) == 1 {
        return Ok(vec![0]);
    }
    Err(ElectError::Malformed("no root in sight".into()))
}

/// [`elect_unbounded`] as an [`Elector`].
pub struct UnboundedElector;

impl Elector for UnboundedElector {
    fn elect(&self, ball: &LabeledBall) -> Result<PathCode, ElectError> {
        elect_unbounded(ball)
    }
}
