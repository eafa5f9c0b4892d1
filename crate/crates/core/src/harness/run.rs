//! The τ-round execution: every node decides from its own ball alone.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bounded_advice::colored_map::ColoredMapElector;
use crate::bounded_advice::scheme::{BoundedElector, SchemeParams};
use crate::election::{ElectError, Elector};
use crate::tree_core::{diameter_and_center, extract_ball, follow_path, AdviceAssignment, NodeId, PathCode, PortLabeledTree};
use crate::unbounded_advice::UnboundedElector;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Scheme {
    Unbounded,
    Bounded(SchemeParams),
    ColoredMap,
}

impl Scheme {
    pub fn name(&self) -> &'static str {
        match self {
            Scheme::Unbounded => "unbounded",
            Scheme::Bounded(_) => "bounded",
            Scheme::ColoredMap => "colored-map",
        }
    }

    pub fn elector(&self) -> Box<dyn Elector> {
        match *self {
            Scheme::Unbounded => Box::new(UnboundedElector),
            Scheme::Bounded(params) => Box::new(BoundedElector::new(params)),
            Scheme::ColoredMap => Box::new(ColoredMapElector::new()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub all_simple: bool,
    pub common_endpoint: bool,
    pub equals_root: bool,
}

impl Flags {
    pub fn passed(&self) -> bool {
        self.all_simple && self.common_endpoint && self.equals_root
    }
}

#[derive(Clone, Debug)]
pub struct ElectionOutcome {
    pub outputs: Vec<Result<PathCode, ElectError>>,
    /// Present exactly when every path is simple and they share an endpoint.
    pub elected: Option<NodeId>,
    pub flags: Flags,
    pub size: usize,
    pub valency: usize,
    pub wall: Duration,
}

impl ElectionOutcome {
    pub fn passed(&self) -> bool {
        self.flags.passed()
    }

    pub fn failures(&self) -> usize {
        self.outputs.iter().filter(|o| o.is_err()).count()
    }
}

pub fn measure_advice(advice: &AdviceAssignment) -> (usize, usize) {
    (advice.size(), advice.valency())
}

/// Endpoint per node, `None` where the path is invalid or not simple.
fn endpoints(tree: &PortLabeledTree, outputs: &[Result<PathCode, ElectError>]) -> Vec<Option<NodeId>> {
    outputs
        .iter()
        .enumerate()
        .map(|(v, out)| out.as_ref().ok().and_then(|code| follow_path(tree, v, code).ok()))
        .collect()
}

fn flags_from(tree: &PortLabeledTree, ends: &[Option<NodeId>]) -> (Flags, Option<NodeId>) {
    let all_simple = ends.iter().all(Option::is_some);
    let first = ends.first().copied().flatten();
    let common_endpoint = all_simple && ends.iter().all(|&e| e == first);
    let elected = if common_endpoint { first } else { None };
    let equals_root = elected == Some(diameter_and_center(tree).root);
    (Flags { all_simple, common_endpoint, equals_root }, elected)
}

/// Simplicity and endpoint agreement of finished outputs.
pub fn verify_outputs(tree: &PortLabeledTree, outputs: &[PathCode]) -> Flags {
    let wrapped: Vec<Result<PathCode, ElectError>> = outputs.iter().cloned().map(Ok).collect();
    flags_from(tree, &endpoints(tree, &wrapped)).0
}

/// Per-node errors are recorded in the outcome, never raised.
pub fn run_election(tree: &PortLabeledTree, advice: &AdviceAssignment, scheme: &Scheme, tau: usize) -> ElectionOutcome {
    run_with(tree, advice, scheme.elector().as_ref(), tau)
}

pub fn run_with(tree: &PortLabeledTree, advice: &AdviceAssignment, elector: &dyn Elector, tau: usize) -> ElectionOutcome {
    let start = Instant::now();
    let outputs: Vec<Result<PathCode, ElectError>> = (0..tree.node_count())
        .into_par_iter()
        .map(|v| elector.elect(&extract_ball(tree, advice, v, tau)))
        .collect();
    let (flags, elected) = flags_from(tree, &endpoints(tree, &outputs));
    let (size, valency) = measure_advice(advice);
    ElectionOutcome { outputs, elected, flags, size, valency, wall: start.elapsed() }
}

/// One line per node: `<node> <p1,p2,…>`, `-` for the empty path, or
/// `<node> ! <reason>` where the node failed.
pub fn format_outputs(outputs: &[Result<PathCode, ElectError>]) -> String {
    let mut out = format!("outputs {}\n", outputs.len());
    for (v, o) in outputs.iter().enumerate() {
        let body = match o {
            Ok(code) if code.is_empty() => "-".to_string(),
            Ok(code) => code.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
            Err(e) => format!("! {e}"),
        };
        out.push_str(&format!("{v} {body}\n"));
    }
    out
}

/// Inverse of [`format_outputs`]; failed nodes come back as `None`.
pub fn parse_outputs(text: &str) -> Result<Vec<Option<PathCode>>, String> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let count: usize = lines
        .next()
        .and_then(|h| h.strip_prefix("outputs "))
        .and_then(|c| c.trim().parse().ok())
        .ok_or("missing `outputs <count>` header")?;
    let mut out = vec![None; count];
    let mut seen = vec![false; count];
    for line in lines {
        let (node, body) = line.split_once(' ').ok_or_else(|| format!("bad line {line:?}"))?;
        let v: usize = node.parse().map_err(|_| format!("bad node in {line:?}"))?;
        if v >= count || seen[v] {
            return Err(format!("node {v} out of range or repeated"));
        }
        seen[v] = true;
        let body = body.trim();
        out[v] = match body {
            "-" => Some(Vec::new()),
            b if b.starts_with('!') => None,
            b => Some(b.split(',').map(|p| p.parse().map_err(|_| format!("bad port in {line:?}"))).collect::<Result<_, _>>()?),
        };
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(format!("no output for node {v}"));
    }
    Ok(out)
}
