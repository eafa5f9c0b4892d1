//! A line `v_0 … v_D` with `z - 1` leaves on the nodes between distance τ and
//! the middle from either end. Members exchange, on one side, the port
//! leading towards the middle with a leaf port.

use super::{assemble, FamilyError, Half, Role, SwapSite, TreeFamily};
use crate::tree_core::NodeId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineFamilyParams {
    pub n_prime: usize,
    pub diameter: usize,
    pub tau: usize,
}

impl LineFamilyParams {
    fn half_span(&self) -> usize {
        self.diameter.div_ceil(2) - self.tau
    }

    /// `⌈(n' - 2τ) / (2(⌈D/2⌉ - τ))⌉`.
    pub fn z(&self) -> usize {
        (self.n_prime - 2 * self.tau).div_ceil(2 * self.half_span())
    }

    fn validate(&self) -> Result<(), FamilyError> {
        if self.diameter < 3 || self.n_prime <= self.diameter {
            return Err(FamilyError::BadParams(format!("need n' > D ≥ 3, got n'={} D={}", self.n_prime, self.diameter)));
        }
        if self.tau >= self.diameter.div_ceil(2) {
            return Err(FamilyError::BadParams(format!("τ = {} is not below ⌈D/2⌉", self.tau)));
        }
        Ok(())
    }
}

/// Ports on the line are 0 towards `v_D` and 1 towards `v_0`; the end `v_D`
/// uses port 0, its only one. Leaves take ports `2..=z`, or `1..z` on an end
/// node (only when τ = 0), so port numbers stay contiguous and every site
/// still offers `z` choices.
pub fn build_line_family(params: LineFamilyParams) -> Result<TreeFamily, FamilyError> {
    params.validate()?;
    let d = params.diameter;
    let z = params.z();
    let mut roles: Vec<Role> = (0..=d).map(|pos| Role::Line { pos }).collect();
    let mut edges = Vec::new();
    for i in 0..d {
        let right_port = if i + 1 == d { 0 } else { 1 };
        edges.push((i, 0, i + 1, right_port));
    }
    let hang = |at: NodeId, roles: &mut Vec<Role>, edges: &mut Vec<_>| {
        let first = if at == 0 || at == d { 1 } else { 2 };
        for port in first..first + z - 1 {
            let leaf = roles.len();
            roles.push(Role::Hanging { pos: at });
            edges.push((at, port, leaf, 0));
        }
    };
    for i in params.tau..d.div_ceil(2) {
        hang(i, &mut roles, &mut edges);
        hang(d - i, &mut roles, &mut edges);
    }
    let base = assemble(roles.len(), &edges)?;
    let span = params.half_span();
    // the port towards the middle, or any leaf port in its place
    let site = |node: NodeId, fixed: usize| {
        let first = if node == 0 || node == d { 1 } else { 2 };
        SwapSite { node, fixed, choices: std::iter::once(fixed).chain(first..first + z - 1).collect() }
    };
    let x = Half { sites: (1..=span).map(|i| site(params.tau + i - 1, 0)).collect(), observers: vec![0], leader: d.div_ceil(2) };
    let y_fixed = |node: NodeId| if node == d { 0 } else { 1 };
    let y = Half {
        sites: (1..=span).map(|i| d - params.tau - i + 1).map(|v| site(v, y_fixed(v))).collect(),
        observers: vec![d],
        leader: d / 2,
    };
    Ok(TreeFamily { base, roles, halves: [x, y] })
}
