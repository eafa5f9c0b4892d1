//! The node-side half of the marker pipeline.
//!
//! In order: a visible white window gives the root directly; otherwise a
//! fully visible first-kind path hands over its top's root path, which is
//! spliced with the ball path to that top; otherwise the node reads the
//! pieces hanging off the blacks on its own way up and fetches the remaining
//! pieces from the start of a first-kind path of its closest top.

use super::markers::{detect_markers, window_len, Detection};
use super::marking::Mark;
use super::payload::decode_payload;
use crate::election::ElectError;
use crate::tree_core::{LabeledBall, PathCode};

struct View<'a> {
    ball: &'a LabeledBall,
    k: usize,
    q: usize,
    segment: usize,
    window: usize,
    lambda: usize,
    detections: Vec<Detection>,
    /// Detection indices by top node.
    by_top: Vec<Vec<usize>>,
    in_window: Vec<bool>,
}

/// Which of the three decoding cases produced an answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecodeRoute {
    White,
    FirstKind,
    Blacks,
}

fn malformed(msg: &str) -> ElectError {
    ElectError::Malformed(msg.to_string())
}

impl<'a> View<'a> {
    fn new(ball: &'a LabeledBall, k: usize, lambda: usize) -> Self {
        let q = ball.radius() / k;
        let detections = detect_markers(ball, k);
        let mut by_top = vec![Vec::new(); ball.len()];
        let mut in_window = vec![false; ball.len()];
        for (i, d) in detections.iter().enumerate() {
            by_top[d.top()].push(i);
            for &x in &d.nodes {
                in_window[x] = true;
            }
        }
        View { ball, k, q, segment: (k - 2) * q, window: window_len(k), lambda, detections, by_top, in_window }
    }

    fn symbol(&self, i: usize) -> u8 {
        self.ball.advice(i).first().unwrap_or(0)
    }

    /// Windows of `kind` starting at `top` and not running back through `from`.
    fn windows_from(&self, top: usize, kind: Mark, from: Option<usize>) -> impl Iterator<Item = &Detection> + '_ {
        self.by_top[top]
            .iter()
            .map(|&i| &self.detections[i])
            .filter(move |d| d.kind == kind && Some(d.below_top()) != from)
    }

    fn is_region_top(&self, x: usize) -> bool {
        self.by_top[x].iter().any(|&i| self.detections[i].kind.is_top())
    }

    /// Walks down from the end of a top's window, reading payload symbols, until
    /// offset `target`; the node there must close the walk (a leaf or green
    /// window at the segment end, a red window otherwise).
    fn walk(&self, at: usize, prev: usize, offset: usize, target: usize, acc: &mut Vec<u8>) -> bool {
        if offset == target {
            return if target == self.segment {
                self.ball.degree(at) == 1 || self.windows_from(at, Mark::Green, Some(prev)).next().is_some()
            } else {
                self.windows_from(at, Mark::Red, Some(prev)).next().is_some()
            };
        }
        if offset % self.q == 0 {
            let reds: Vec<&Detection> = self.windows_from(at, Mark::Red, Some(prev)).collect();
            for d in reds {
                let last = self.window - 1;
                if self.walk(d.nodes[last], d.nodes[last - 1], offset + last, target, acc) {
                    return true;
                }
            }
            return false;
        }
        let next_offset = offset + 1;
        let reads_payload = next_offset < self.segment && next_offset % self.q >= self.window;
        let nexts: Vec<usize> = self.ball.neighbors(at).map(|(_, x)| x).filter(|&x| x != prev).collect();
        for x in nexts {
            if reads_payload {
                if self.in_window[x] || self.is_region_top(x) {
                    continue;
                }
                acc.push(self.symbol(x));
            }
            if self.walk(x, at, next_offset, target, acc) {
                return true;
            }
            if reads_payload {
                acc.pop();
            }
        }
        false
    }

    /// Payload prefix of `pieces` pieces read along a first-kind path from `top`.
    fn first_kind_prefix(&self, top: usize, pieces: usize) -> Option<Vec<u8>> {
        let target = pieces * self.q;
        let last = self.window - 1;
        for &i in &self.by_top[top] {
            let d = &self.detections[i];
            if !d.kind.is_top() {
                continue;
            }
            let mut acc = Vec::new();
            if self.walk(d.nodes[last], d.nodes[last - 1], last, target, &mut acc) {
                return Some(acc);
            }
        }
        None
    }

    /// Path from the center to wherever `top_path`, read from ball node `u`, ends.
    fn splice(&self, u: usize, top_path: &[usize]) -> PathCode {
        let walk = self.ball.path(u, 0);
        let mut i = 0;
        while i < top_path.len() && i + 1 < walk.len() && self.ball.neighbor(walk[i], top_path[i]) == Some(walk[i + 1]) {
            i += 1;
        }
        let mut out = self.ball.path_code(0, walk[i]);
        out.extend_from_slice(&top_path[i..]);
        out
    }

    fn decode(&self, symbols: &[u8]) -> Result<PathCode, ElectError> {
        Ok(decode_payload(symbols, self.k, self.lambda)?)
    }

    fn elect(&self) -> Result<(PathCode, DecodeRoute), ElectError> {
        if let Some(d) = self.detections.iter().find(|d| d.kind == Mark::White) {
            return Ok((self.ball.path_code(0, d.top()), DecodeRoute::White));
        }
        let mut tops: Vec<usize> = self.detections.iter().filter(|d| d.kind.is_top()).map(Detection::top).collect();
        tops.sort_unstable();
        tops.dedup();
        for &u in &tops {
            if let Some(symbols) = self.first_kind_prefix(u, self.k - 2) {
                if let Ok(top_path) = self.decode(&symbols) {
                    return Ok((self.splice(u, &top_path), DecodeRoute::FirstKind));
                }
            }
        }
        Ok((self.elect_from_blacks(&tops)?, DecodeRoute::Blacks))
    }

    fn elect_from_blacks(&self, tops: &[usize]) -> Result<PathCode, ElectError> {
        let ball = self.ball;
        // a window hanging below t through t's ball parent certifies t as an ancestor
        let certified = |t: usize| {
            t == 0 || {
                let up = ball.node(t).parent.map(|l| l.node);
                self.by_top[t].iter().any(|&i| {
                    let d = &self.detections[i];
                    d.kind.is_top() && Some(d.below_top()) == up
                })
            }
        };
        let u = tops
            .iter()
            .copied()
            .filter(|&t| certified(t))
            .min_by_key(|&t| ball.depth(t))
            .ok_or_else(|| malformed("no marked ancestor in sight"))?;
        let down = ball.path(u, 0);
        let q = self.q;
        let blacks: Vec<usize> = (1..self.k - 2)
            .filter(|&b| b * q < down.len())
            .filter(|&b| self.windows_from(down[b * q], Mark::Black, Some(down[b * q - 1])).next().is_some())
            .collect();
        let piece_len = q - self.window;
        let mut pieces: Vec<Option<Vec<u8>>> = vec![None; self.k - 2];
        if let Some(&first) = blacks.first() {
            for pair in blacks.windows(2) {
                let (b, next) = (pair[0], pair[1]);
                if next != b + 1 {
                    return Err(malformed("gap between blacks"));
                }
                let from = b * q + self.window;
                let symbols = down[from..from + piece_len].iter().map(|&x| self.symbol(x)).collect();
                pieces[self.k - 3 - (b - first)] = Some(symbols);
            }
        }
        let from_blacks = pieces.iter().filter(|p| p.is_some()).count();
        let missing = self.k - 2 - from_blacks;
        let prefix = self
            .first_kind_prefix(u, missing)
            .ok_or_else(|| malformed("no first-kind path prefix in sight"))?;
        for (i, chunk) in prefix.chunks(piece_len).enumerate() {
            if pieces[i].is_some() {
                return Err(malformed("pieces overlap"));
            }
            pieces[i] = Some(chunk.to_vec());
        }
        let symbols: Vec<u8> = pieces
            .into_iter()
            .map(|p| p.ok_or_else(|| malformed("piece missing")))
            .collect::<Result<Vec<_>, _>>()?
            .concat();
        let top_path = self.decode(&symbols)?;
        let mut out = ball.path_code(0, u);
        out.extend(top_path);
        Ok(out)
    }
}

/// Pipeline election for a ball whose nodes hold one symbol each.
pub fn elect_pipeline(ball: &LabeledBall, k: usize, lambda: usize) -> Result<PathCode, ElectError> {
    elect_pipeline_route(ball, k, lambda).map(|(path, _)| path)
}

pub fn elect_pipeline_route(ball: &LabeledBall, k: usize, lambda: usize) -> Result<(PathCode, DecodeRoute), ElectError> {
    if ball.radius() / k <= window_len(k) {
        return Err(malformed("radius too small for the segment constant"));
    }
    View::new(ball, k, lambda).elect()
}
