//! The layered construction: a center `r` with `k1 · k2` paths of length
//! `D/2`, leaves attached at fixed depths so that a colored map can tell every
//! node its place, and free leaf ports on the middle stretch of each path.

use super::{assemble, FamilyError, Half, Role, SwapSite, TreeFamily};
use crate::tree_core::{NodeId, Port};

/// Which witness coloring a family is built for, with the constant its
/// default parameters came from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Regime {
    Small { epsilon: f64 },
    Medium { b: f64 },
    Large { beta: f64 },
}

impl Regime {
    pub fn tag(&self) -> &'static str {
        match self {
            Regime::Small { .. } => "small",
            Regime::Medium { .. } => "medium",
            Regime::Large { .. } => "large",
        }
    }
}

/// Every field may be set by hand; the constructors only supply defaults.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneralFamilyParams {
    pub diameter: usize,
    pub tau: usize,
    /// Subtrees hanging from the center.
    pub k1: usize,
    /// Paths per subtree, even.
    pub k2: usize,
    /// Choices per swap site; white nodes carry `z - 1` leaves.
    pub z: usize,
    /// Dotted leaves per dotted node.
    pub z_prime: usize,
    pub regime: Regime,
}

fn log2_floor(x: f64) -> usize {
    x.log2().floor().max(0.0) as usize
}

impl GeneralFamilyParams {
    /// `k1 = ⌈n'^ε⌉`, `k2 = 2⌈n'^(1-4ε)/2⌉`, `z' = ⌊(1-3ε) log n'⌋`.
    pub fn small(n_prime: usize, diameter: usize, alpha: f64, epsilon: f64) -> Self {
        let n = n_prime as f64;
        let d = diameter as f64;
        let z = (2.0 * (n - n.powf(1.0 - epsilon)) / (n.powf(1.0 - 3.0 * epsilon) * (1.0 - 2.0 * alpha) * d)).ceil();
        GeneralFamilyParams {
            diameter,
            tau: (alpha * d).floor() as usize,
            k1: n.powf(epsilon).ceil() as usize,
            k2: 2 * (n.powf(1.0 - 4.0 * epsilon) / 2.0).ceil() as usize,
            z: (z as usize).max(1),
            z_prime: ((1.0 - 3.0 * epsilon) * n.log2()).floor().max(0.0) as usize,
            regime: Regime::Small { epsilon },
        }
    }

    /// One subtree of `2⌈bn'/D⌉` paths, no dotted leaves.
    pub fn medium(n_prime: usize, diameter: usize, alpha: f64, b: f64) -> Self {
        let n = n_prime as f64;
        let tau = (alpha * diameter as f64).floor() as usize;
        let k2 = 2 * (b * n / diameter as f64).ceil() as usize;
        let stretch = (diameter / 2).saturating_sub(tau + 1).max(1);
        let z = ((n - b * n) / (k2 * stretch) as f64).ceil() as usize;
        GeneralFamilyParams { diameter, tau, k1: 1, k2, z: z.max(1), z_prime: 0, regime: Regime::Medium { b } }
    }

    /// Two paths from the center; `z` as in the line family.
    pub fn large(n_prime: usize, diameter: usize, beta: f64) -> Self {
        let tau = (beta * diameter as f64).floor() as usize;
        let span = diameter.div_ceil(2).saturating_sub(tau).max(1);
        let z = (n_prime.saturating_sub(2 * tau)).div_ceil(2 * span);
        GeneralFamilyParams { diameter, tau, k1: 1, k2: 2, z: z.max(1), z_prime: 0, regime: Regime::Large { beta } }
    }

    /// Path length from an endpoint to the center (`D/2`, or `(D-1)/2` for odd `D`).
    pub fn half_length(&self) -> usize {
        self.diameter / 2
    }

    /// Swap sites per path.
    pub fn y(&self) -> usize {
        self.half_length().saturating_sub(self.tau + 1)
    }

    /// `⌊D / (2(τ-1))⌋`.
    pub fn gamma(&self) -> usize {
        self.diameter / (2 * (self.tau.max(2) - 1))
    }

    /// Grey leaves per grey node.
    pub fn distance_bits(&self) -> usize {
        log2_floor(self.diameter as f64)
    }

    /// Upper bound on the node count the construction promises.
    pub fn node_bound(&self) -> f64 {
        let per_path = (self.tau + 1) as f64
            + (self.z * self.y()) as f64
            + (self.z_prime as f64 + self.distance_bits() as f64 + (self.k1 as f64 - 1.0) / 2.0) * self.gamma() as f64;
        (self.k1 * self.k2) as f64 * per_path
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let bad = |m: String| Err(FamilyError::BadParams(m));
        if self.k1 == 0 || self.k2 == 0 || self.k2 % 2 != 0 {
            return bad(format!("need k1 ≥ 1 and even k2 ≥ 2, got k1={} k2={}", self.k1, self.k2));
        }
        if self.tau < 3 {
            return bad(format!("attachment strides need τ ≥ 3, got {}", self.tau));
        }
        if self.y() == 0 {
            return bad(format!("D={} leaves no white stretch beyond τ={}", self.diameter, self.tau));
        }
        if self.z == 0 {
            return bad("z must be positive".into());
        }
        Ok(())
    }

    /// Depths `q(τ-2) + offset` for `q ≥ 1` that lie on a path.
    fn stride_levels(&self, offset: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let step = self.tau - 2;
        (1..).map(move |q| (q, q * step + offset)).take_while(move |&(_, level)| level < self.half_length())
    }
}

/// Digits of `value` in `base`, most significant first, padded to `width`.
pub(crate) fn digits(mut value: usize, base: usize, width: usize) -> Vec<usize> {
    let mut out = vec![0; width];
    for slot in out.iter_mut().rev() {
        *slot = value % base;
        value /= base;
    }
    out
}

/// Node ids: the center is 0, then each path `(i, j)` in order with its
/// nodes `v(0) … v(D/2 - 1)`, then all leaves, then the extension node for
/// odd `D`. On a path, port 0 leads towards the center and port 1 away.
pub fn build_general_family(params: GeneralFamilyParams) -> Result<TreeFamily, FamilyError> {
    params.validate()?;
    let (k1, k2, z, tau) = (params.k1, params.k2, params.z, params.tau);
    let h = params.half_length();
    let mut roles = vec![Role::Center];
    let mut edges: Vec<(NodeId, Port, NodeId, Port)> = Vec::new();
    let path_node = |branch: usize, strand: usize, level: usize| 1 + ((branch - 1) * k2 + strand - 1) * h + level;
    for branch in 1..=k1 {
        for strand in 1..=k2 {
            for level in 0..h {
                roles.push(Role::Path { branch, strand, level });
                let v = path_node(branch, strand, level);
                if level + 1 < h {
                    edges.push((v, 0, v + 1, 1));
                } else {
                    edges.push((v, 0, 0, (branch - 1) * k2 + strand - 1));
                }
            }
        }
    }
    let mut leaf = |at: NodeId, port: Port, role: Role, roles: &mut Vec<Role>| {
        let id = roles.len();
        roles.push(role);
        edges.push((at, port, id, 0));
    };
    for branch in 1..=k1 {
        for strand in 1..=k2 {
            let v = |level| path_node(branch, strand, level);
            for level in tau + 1..h {
                for port in 2..=z {
                    leaf(v(level), port, Role::White { branch, strand, level }, &mut roles);
                }
            }
            for (_, level) in params.stride_levels(3) {
                for bit in 0..params.distance_bits() {
                    leaf(v(level), z + 1 + bit, Role::Grey { branch, strand, level, bit }, &mut roles);
                }
            }
            // the first black and dotted nodes sit at τ and τ-1, below the
            // white stretch, so their leaves start right after the path ports
            for (q, level) in params.stride_levels(2) {
                let first = if q == 1 { 2 } else { z + 1 };
                for extra in 0..branch - 1 {
                    leaf(v(level), first + extra, Role::Black { branch, strand, level }, &mut roles);
                }
            }
            for (q, level) in params.stride_levels(1) {
                let first = if q == 1 { 2 } else { z + 1 };
                for slot in 0..params.z_prime {
                    leaf(v(level), first + slot, Role::Dotted { branch, strand, level, slot }, &mut roles);
                }
            }
        }
    }
    if params.diameter % 2 == 1 {
        let id = roles.len();
        roles.push(Role::Extension);
        edges.push((path_node(1, 1, 0), 1, id, 0));
    }
    let base = assemble(roles.len(), &edges)?;
    let leader = crate::tree_core::diameter_and_center(&base).root;
    let half = |strands: std::ops::RangeInclusive<usize>| {
        let mut sites = Vec::new();
        let mut observers = Vec::new();
        for branch in 1..=k1 {
            for strand in strands.clone() {
                observers.push(path_node(branch, strand, 0));
                for k in 1..=params.y() {
                    let choices = std::iter::once(0).chain(2..=z).collect();
                    sites.push(SwapSite { node: path_node(branch, strand, tau + k), fixed: 0, choices });
                }
            }
        }
        Half { sites, observers, leader }
    };
    Ok(TreeFamily { base, roles, halves: [half(1..=k2 / 2), half(k2 / 2 + 1..=k2)] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::{canonical_form, diameter_and_center};

    fn params(diameter: usize, tau: usize, k1: usize, k2: usize, z: usize, z_prime: usize) -> GeneralFamilyParams {
        GeneralFamilyParams { diameter, tau, k1, k2, z, z_prime, regime: Regime::Small { epsilon: 0.1 } }
    }

    #[test]
    fn black_leaves_count_the_branch() {
        let p = params(40, 6, 3, 2, 3, 2);
        let fam = build_general_family(p).unwrap();
        for (v, role) in fam.roles.iter().enumerate() {
            if let Role::Path { branch, level, .. } = *role {
                let blacks = fam.base.neighbors(v).iter().filter(|&&(u, _)| matches!(fam.roles[u], Role::Black { .. })).count();
                let expected = if level > 2 && (level - 2) % (p.tau - 2) == 0 { branch - 1 } else { 0 };
                assert_eq!(blacks, expected, "{role:?}");
                if level == p.tau {
                    // the only non-leaf in the endpoint's view, degree i+1
                    assert_eq!(fam.base.degree(v), branch + 1);
                }
            }
        }
    }

    fn stride_count(p: &GeneralFamilyParams, offset: usize) -> usize {
        (1..p.half_length()).filter(|&l| l >= p.tau - 2 + offset && (l - offset) % (p.tau - 2) == 0).count()
    }

    #[test]
    fn node_count_by_hand() {
        for p in [params(40, 6, 3, 2, 3, 2), params(30, 5, 1, 4, 4, 0), params(24, 7, 2, 2, 2, 1), params(33, 5, 2, 2, 4, 1)] {
            let fam = build_general_family(p).unwrap();
            let per_branch = |i: usize| {
                p.half_length()
                    + (p.z - 1) * p.y()
                    + p.distance_bits() * stride_count(&p, 3)
                    + (i - 1) * stride_count(&p, 2)
                    + p.z_prime * stride_count(&p, 1)
            };
            let expected: usize = 1 + p.diameter % 2 + (1..=p.k1).map(|i| p.k2 * per_branch(i)).sum::<usize>();
            assert_eq!(fam.node_count(), expected, "{p:?}");
        }
    }

    #[test]
    fn displayed_bound_leaves_out_the_center() {
        // with at most γ stride levels per kind, the product covers every node but r
        for p in [params(40, 6, 3, 2, 3, 2), params(30, 5, 1, 4, 4, 0), params(24, 7, 2, 2, 2, 1)] {
            assert!(stride_count(&p, 3) <= p.gamma());
            let n = build_general_family(p).unwrap().node_count() as f64;
            assert!(n <= p.node_bound() + 1.0, "{p:?}: {n} nodes");
        }
        let tight = params(40, 6, 3, 2, 3, 2);
        assert_eq!(build_general_family(tight).unwrap().node_count() as f64, tight.node_bound() + 1.0);
    }

    #[test]
    fn diameter_and_root() {
        for d in [30, 31] {
            let fam = build_general_family(params(d, 5, 1, 4, 3, 0)).unwrap();
            let info = diameter_and_center(&fam.base);
            assert_eq!(info.diameter, d);
            if d % 2 == 0 {
                assert_eq!(info.root, 0);
            }
        }
    }

    #[test]
    fn member_count_and_distinct_members() {
        let p = params(20, 5, 1, 2, 3, 0);
        let fam = build_general_family(p).unwrap();
        assert_eq!(p.y(), 4);
        assert_eq!(fam.member_count(0), Some(3u128.pow(4)));
        let n = fam.node_count();
        let mut seen = std::collections::HashSet::new();
        for index in 0..fam.member_count(0).unwrap() {
            let t = fam.member(0, &fam.descriptor(0, index)).unwrap();
            assert_eq!(t.node_count(), n);
            assert_eq!(diameter_and_center(&t).diameter, 20);
            assert!(seen.insert(canonical_form(&t)));
        }
    }

    #[test]
    fn crowded_strides_are_rejected() {
        // τ = 4 puts the first grey node and the second dotted node on the same level
        assert!(build_general_family(params(30, 4, 1, 2, 3, 2)).is_err());
        assert!(build_general_family(params(30, 4, 1, 2, 3, 0)).is_ok());
        assert!(build_general_family(params(30, 2, 1, 2, 3, 0)).is_err());
        assert!(build_general_family(params(30, 5, 1, 3, 3, 0)).is_err());
    }

    #[test]
    fn default_parameters() {
        let large = GeneralFamilyParams::large(1000, 800, 0.2);
        assert_eq!((large.k1, large.k2, large.z_prime, large.tau), (1, 2, 0, 160));
        assert_eq!(large.z, (1000 - 320usize).div_ceil(2 * 240));
        let medium = GeneralFamilyParams::medium(10_000, 200, 0.1, 0.01);
        assert_eq!((medium.k1, medium.k2), (1, 2));
        let small = GeneralFamilyParams::small(1 << 16, 8, 0.4, 0.1);
        assert_eq!(small.z_prime, 11);
        assert!(small.k2 % 2 == 0);
    }
}
