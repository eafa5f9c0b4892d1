//! Constant-size advice: one symbol per node from the marker pipeline when the
//! tree is large enough, otherwise the whole colored map under a searched
//! coloring.

use rayon::prelude::*;
use thiserror::Error;

use super::betas::{solve_betas, BetaError};
use super::colored_map::{colored_map_advice, ColoredMapElector, ColoredMapError};
use super::decode::elect_pipeline;
use super::markers::{assign_marker_bits, window_len, MarkerError};
use super::marking::{mark_nodes, Marking};
use super::payload::coding_payload;
use crate::codec::encode_sequence;
use crate::election::{ElectError, Elector};
use crate::tree_core::{
    diameter_and_center, AdviceAssignment, AdviceString, LabeledBall, NodeId, PathCode, PortLabeledTree, Rooted,
};

/// Largest tree the fallback coloring search accepts.
pub const FALLBACK_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchemeParams {
    pub lambda: usize,
    pub tau: usize,
    pub k: usize,
    /// Diameter-to-size ratio the tree class is built for.
    pub c: f64,
}

impl SchemeParams {
    pub fn stride(&self) -> usize {
        self.tau / self.k
    }

    pub fn segment(&self) -> usize {
        (self.k - 2) * self.stride()
    }

    /// Smallest τ for which the pipeline runs with this `k`.
    pub fn tau_threshold(k: usize) -> usize {
        k * (k - 2) * (2 * k + 10) + k + 1
    }

    pub fn pipeline_active(&self, n: usize) -> bool {
        self.tau >= Self::tau_threshold(self.k) && (n as f64) * (1.0 - self.c) >= 200.0
    }
}

/// Smallest `k > 3` with `τ(k-3) ≥ τ'(k+1)`.
pub fn choose_k(tau: usize, tau_prime: usize) -> Option<usize> {
    if tau_prime == 0 {
        return Some(4);
    }
    (4..=tau.max(4) + 4).find(|&k| tau * (k - 3) >= tau_prime * (k + 1))
}

/// `⌊β₂·D⌋`, the time the advice of the larger fixed point is tuned for.
pub fn tau_prime(diameter: usize, c: f64, lambda: usize) -> Result<usize, BetaError> {
    Ok((solve_betas(c, lambda)?.beta2 * diameter as f64).floor() as usize)
}

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error(transparent)]
    Marker(#[from] MarkerError),
    #[error(transparent)]
    Betas(#[from] BetaError),
    #[error(transparent)]
    ColoredMap(#[from] ColoredMapError),
    #[error("{} nodes deeper than τ have no top within reach", .0.len())]
    Coverage(Vec<NodeId>),
    #[error("τ = {tau} is too small for any k given τ' = {tau_prime}")]
    NoSegmentConstant { tau: usize, tau_prime: usize },
    #[error("fallback search refuses {nodes} nodes (cap {cap})")]
    FallbackTooLarge { nodes: usize, cap: usize },
    #[error("no {lambda}-coloring identifies every node at time {tau}")]
    NoDistinguishingColoring { lambda: usize, tau: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Pipeline,
    ColoredMap,
}

#[derive(Clone, Debug)]
pub struct BoundedAdvice {
    pub advice: AdviceAssignment,
    pub params: SchemeParams,
    pub route: Route,
}

/// Parameters with `k` picked from the fixed point for `(c, λ)`.
pub fn scheme_params(tree: &PortLabeledTree, tau: usize, lambda: usize, c: f64) -> Result<SchemeParams, SchemeError> {
    let diameter = diameter_and_center(tree).diameter;
    let tau_prime = tau_prime(diameter, c, lambda)?;
    let k = choose_k(tau, tau_prime).ok_or(SchemeError::NoSegmentConstant { tau, tau_prime })?;
    Ok(SchemeParams { lambda, tau, k, c })
}

/// [`bounded_valency_advice_with`] under [`scheme_params`].
pub fn bounded_valency_advice(
    tree: &PortLabeledTree,
    tau: usize,
    lambda: usize,
    c: f64,
) -> Result<BoundedAdvice, SchemeError> {
    bounded_valency_advice_with(tree, scheme_params(tree, tau, lambda, c)?, FALLBACK_CAP)
}

pub fn bounded_valency_advice_with(
    tree: &PortLabeledTree,
    params: SchemeParams,
    fallback_cap: usize,
) -> Result<BoundedAdvice, SchemeError> {
    let n = tree.node_count();
    if params.pipeline_active(n) {
        let symbols = pipeline_symbols(tree, &params)?;
        let advice = AdviceAssignment::from_colors(params.lambda, &symbols).expect("symbols below λ");
        return Ok(BoundedAdvice { advice, params, route: Route::Pipeline });
    }
    if n > fallback_cap {
        return Err(SchemeError::FallbackTooLarge { nodes: n, cap: fallback_cap });
    }
    let advice = fallback_advice(tree, params.tau, params.lambda)?;
    Ok(BoundedAdvice { advice, params, route: Route::ColoredMap })
}

/// Marking, marker windows and payloads, one symbol per node.
pub fn pipeline_symbols(tree: &PortLabeledTree, params: &SchemeParams) -> Result<Vec<u8>, SchemeError> {
    let marking = mark_nodes(tree, params.tau, params.k);
    let uncovered = marking.coverage_violations();
    if !uncovered.is_empty() {
        return Err(SchemeError::Coverage(uncovered));
    }
    let (k, q, lambda) = (params.k, params.stride(), params.lambda);
    let rooted = &marking.rooted;
    Ok(assign_marker_bits(&marking, |top| coding_payload(&rooted.ports_to_root(top), k, q, lambda, top))?)
}

/// The marking the pipeline would use, for inspection.
pub fn pipeline_marking(tree: &PortLabeledTree, params: &SchemeParams) -> Marking {
    mark_nodes(tree, params.tau, params.k)
}

/// Nodes no deeper than `⌈D/2⌉ - τ'` whose encoded root path is longer than `τ' + 1`.
pub fn depth_bound_violations(tree: &PortLabeledTree, tau_prime: usize, lambda: usize) -> Vec<NodeId> {
    let info = diameter_and_center(tree);
    let limit = info.diameter.div_ceil(2).saturating_sub(tau_prime);
    let rooted = Rooted::new(tree, info.root);
    (0..tree.node_count())
        .filter(|&v| rooted.depth[v] <= limit)
        .filter(|&v| encode_sequence(&rooted.ports_to_root(v), lambda).unwrap().len() > tau_prime + 1)
        .collect()
}

/// First coloring in lexicographic order under which the colored map
/// identifies every node's root path at time τ.
pub fn fallback_coloring(tree: &PortLabeledTree, tau: usize, lambda: usize) -> Option<Vec<u8>> {
    let n = tree.node_count();
    let total = (lambda as u64).checked_pow(n as u32)?;
    (0..total).into_par_iter().find_map_first(|index| {
        let colors = super::election_index::nth_coloring(index, lambda, n);
        colored_map_advice(tree, &colors, tau, lambda).ok().map(|_| colors)
    })
}

fn fallback_advice(tree: &PortLabeledTree, tau: usize, lambda: usize) -> Result<AdviceAssignment, SchemeError> {
    let colors = fallback_coloring(tree, tau, lambda).ok_or(SchemeError::NoDistinguishingColoring { lambda, tau })?;
    Ok(colored_map_advice(tree, &colors, tau, lambda)?)
}

fn is_pipeline_advice(advice: &AdviceString) -> bool {
    advice.len() == 1
}

/// Election matching [`bounded_valency_advice`]: one-symbol advice goes
/// through marker detection, anything longer carries a colored map.
pub fn bounded_valency_election(ball: &LabeledBall, params: &SchemeParams) -> Result<PathCode, ElectError> {
    if is_pipeline_advice(ball.advice(0)) {
        elect_pipeline(ball, params.k, params.lambda)
    } else {
        super::colored_map::elect_colored_map(ball)
    }
}

/// [`bounded_valency_election`] with the colored-map index cached across nodes.
pub struct BoundedElector {
    params: SchemeParams,
    maps: ColoredMapElector,
}

impl BoundedElector {
    pub fn new(params: SchemeParams) -> Self {
        BoundedElector { params, maps: ColoredMapElector::new() }
    }
}

impl Elector for BoundedElector {
    fn elect(&self, ball: &LabeledBall) -> Result<PathCode, ElectError> {
        if is_pipeline_advice(ball.advice(0)) {
            elect_pipeline(ball, self.params.k, self.params.lambda)
        } else {
            self.maps.elect(ball)
        }
    }
}

/// Whether a ball of this radius can hold full windows at the stride for `k`.
pub fn stride_fits(tau: usize, k: usize) -> bool {
    tau / k > window_len(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::{build_tree, extract_ball, follow_path, Edge};

    #[test]
    fn k_choice() {
        assert_eq!(choose_k(100, 0), Some(4));
        assert_eq!(choose_k(500, 100), Some(4));
        // 5/1 fails, 6/2 = 3 ≥ 3 holds at k=5
        assert_eq!(choose_k(300, 100), Some(5));
        assert_eq!(SchemeParams::tau_threshold(4), 149);
    }

    #[test]
    fn two_nodes_fall_back() {
        let two = build_tree(&[Edge::new(0, 0, 1, 0)]).unwrap();
        let params = SchemeParams { lambda: 2, tau: 0, k: 4, c: 0.5 };
        let out = bounded_valency_advice_with(&two, params, FALLBACK_CAP).unwrap();
        assert_eq!(out.route, Route::ColoredMap);
        assert_ne!(out.advice.get(0).first(), out.advice.get(1).first());
        let root = diameter_and_center(&two).root;
        for v in 0..2 {
            let ball = extract_ball(&two, &out.advice, v, 0);
            let path = bounded_valency_election(&ball, &params).unwrap();
            assert_eq!(follow_path(&two, v, &path).unwrap(), root);
        }
    }

    #[test]
    fn fallback_cap() {
        let edges: Vec<Edge> = (0..20).map(|i| Edge::new(i, usize::from(i > 0), i + 1, 0)).collect();
        let path = build_tree(&edges).unwrap();
        let params = SchemeParams { lambda: 2, tau: 3, k: 4, c: 0.5 };
        assert!(matches!(
            bounded_valency_advice_with(&path, params, FALLBACK_CAP),
            Err(SchemeError::FallbackTooLarge { nodes: 21, .. })
        ));
    }

    #[test]
    fn too_few_colors() {
        // at time 0 the four inner nodes of a 6-path see only their degree and
        // color, yet all need different outputs
        let edges: Vec<Edge> = (0..5).map(|i| Edge::new(i, usize::from(i > 0), i + 1, 0)).collect();
        let path = build_tree(&edges).unwrap();
        let params = SchemeParams { lambda: 2, tau: 0, k: 4, c: 0.5 };
        assert!(matches!(
            bounded_valency_advice_with(&path, params, FALLBACK_CAP),
            Err(SchemeError::NoDistinguishingColoring { .. })
        ));
        let wider = SchemeParams { lambda: 4, ..params };
        assert!(bounded_valency_advice_with(&path, wider, FALLBACK_CAP).is_ok());
    }
}
