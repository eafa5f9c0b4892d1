//! Plain-text formats.
//!
//! Tree file: a line `n <count>` and then one edge per line as
//! `u port_at_u v port_at_v`. Advice file: a line `lambda <size>` and then
//! `<node> <symbols>` per node, `-` standing for the empty string. Blank
//! lines and `#` comments are ignored in both.

use std::fmt::Write as _;

use thiserror::Error;

use super::advice::{AdviceAssignment, AdviceError, AdviceString};
use super::tree::{Edge, PortLabeledTree, TreeError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Advice(#[from] AdviceError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

pub fn parse_tree(text: &str) -> Result<PortLabeledTree, FormatError> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or_else(|| syntax(1, "empty tree file"))?;
    let count = match head.as_slice() {
        ["n", c] => c.parse::<usize>().map_err(|_| syntax(line, "bad node count"))?,
        _ => return Err(syntax(line, "expected `n <count>`")),
    };
    let mut edges = Vec::new();
    for (line, fields) in lines {
        let nums: Result<Vec<usize>, _> = fields.iter().map(|f| f.parse::<usize>()).collect();
        match nums.as_deref() {
            Ok([u, pu, v, pv]) => edges.push(Edge::new(*u, *pu, *v, *pv)),
            _ => return Err(syntax(line, "expected `u port_at_u v port_at_v`")),
        }
    }
    Ok(PortLabeledTree::from_edges(count, &edges)?)
}

pub fn format_tree(tree: &PortLabeledTree) -> String {
    let mut out = format!("n {}\n", tree.node_count());
    for e in tree.edges() {
        writeln!(out, "{} {} {} {}", e.u, e.port_at_u, e.v, e.port_at_v).unwrap();
    }
    out
}

pub fn parse_advice(text: &str, nodes: usize) -> Result<AdviceAssignment, FormatError> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or_else(|| syntax(1, "empty advice file"))?;
    let alphabet = match head.as_slice() {
        ["lambda", l] => l.parse::<usize>().map_err(|_| syntax(line, "bad alphabet size"))?,
        _ => return Err(syntax(line, "expected `lambda <size>`")),
    };
    let mut strings: Vec<Option<AdviceString>> = vec![None; nodes];
    for (line, fields) in lines {
        let [id, body] = fields.as_slice() else {
            return Err(syntax(line, "expected `<node> <symbols>`"));
        };
        let id: usize = id.parse().map_err(|_| syntax(line, "bad node id"))?;
        if id >= nodes {
            return Err(syntax(line, format!("node {id} out of range")));
        }
        let s = AdviceString::from_text(body).ok_or_else(|| syntax(line, "bad advice symbols"))?;
        strings[id] = Some(s);
    }
    let strings = strings
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| syntax(0, format!("no advice for node {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AdviceAssignment::new(alphabet, strings)?)
}

pub fn format_advice(advice: &AdviceAssignment) -> String {
    let mut out = format!("lambda {}\n", advice.alphabet());
    for (v, s) in advice.strings().iter().enumerate() {
        writeln!(out, "{v} {}", s.to_text()).unwrap();
    }
    out
}
