//! Seeded experiment grids: generate trees, advise, elect, and emit one CSV
//! row per tree, scheme and τ.

use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::generate::{random_tree, random_tree_with_diameter};
use super::run::{run_election, Scheme};
use crate::bounded_advice::betas::{solve_betas, BetaError};
use crate::bounded_advice::colored_map::colored_map_advice;
use crate::bounded_advice::scheme::{bounded_valency_advice, fallback_coloring, SchemeError, FALLBACK_CAP};
use crate::tree_core::{diameter_and_center, AdviceAssignment, PortLabeledTree};
use crate::unbounded_advice::advice_unbounded;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchemeKind {
    Unbounded,
    Bounded,
    ColoredMap,
}

impl FromStr for SchemeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "unbounded" => Ok(SchemeKind::Unbounded),
            "bounded" => Ok(SchemeKind::Bounded),
            "colored-map" => Ok(SchemeKind::ColoredMap),
            other => Err(format!("unknown scheme {other:?}; expected unbounded, bounded or colored-map")),
        }
    }
}

#[derive(Debug, Error)]
pub enum AdviseError {
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error("colored-map advice: {0}")]
    ColoredMap(String),
}

/// Advice for `tree` under `kind` together with the matching elector.
/// Colored-map advice uses the first coloring that identifies every node,
/// searched only on trees of at most [`FALLBACK_CAP`] nodes.
pub fn advise(
    tree: &PortLabeledTree,
    kind: SchemeKind,
    tau: usize,
    lambda: usize,
    c: f64,
) -> Result<(AdviceAssignment, Scheme), AdviseError> {
    match kind {
        SchemeKind::Unbounded => Ok((advice_unbounded(tree, tau), Scheme::Unbounded)),
        SchemeKind::Bounded => {
            let out = bounded_valency_advice(tree, tau, lambda, c)?;
            Ok((out.advice, Scheme::Bounded(out.params)))
        }
        SchemeKind::ColoredMap => {
            if tree.node_count() > FALLBACK_CAP {
                return Err(SchemeError::FallbackTooLarge { nodes: tree.node_count(), cap: FALLBACK_CAP }.into());
            }
            let colors = fallback_coloring(tree, tau, lambda)
                .ok_or_else(|| AdviseError::ColoredMap(format!("no {lambda}-coloring identifies every node at τ = {tau}")))?;
            let advice = colored_map_advice(tree, &colors, tau, lambda).map_err(|e| AdviseError::ColoredMap(e.to_string()))?;
            Ok((advice, Scheme::ColoredMap))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Uniform random labeled tree.
    Random,
    /// Random tree with `D = ⌈f·n⌉` for each listed fraction.
    Diameter,
}

/// A sweep descriptor, read from TOML.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub generator: GeneratorKind,
    pub scheme: SchemeKind,
    #[serde(default)]
    pub seed: u64,
    /// Trees per `(n, D)` cell.
    #[serde(default = "one")]
    pub trees: usize,
    #[serde(default)]
    pub n: Vec<usize>,
    #[serde(default)]
    pub diameter_fraction: Vec<f64>,
    /// Explicit election times.
    #[serde(default)]
    pub tau: Vec<usize>,
    /// Times `⌊f·D⌋`.
    #[serde(default)]
    pub tau_fraction: Vec<f64>,
    /// Every τ from 0 to `⌈D/2⌉`.
    #[serde(default)]
    pub all_tau: bool,
    #[serde(default = "two")]
    pub lambda: usize,
    #[serde(default = "half")]
    pub c: f64,
}

fn one() -> usize {
    1
}
fn two() -> usize {
    2
}
fn half() -> f64 {
    0.5
}

impl SweepSpec {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    /// Election times for a tree of diameter `d`, sorted and without repeats.
    pub fn taus(&self, d: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.tau.clone();
        out.extend(self.tau_fraction.iter().map(|f| (f * d as f64).floor() as usize));
        if self.all_tau {
            out.extend(0..=d.div_ceil(2));
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub scheme: SchemeKind,
    pub tree: usize,
    pub n: usize,
    pub diameter: usize,
    pub tau: usize,
    pub lambda: usize,
    pub size: usize,
    pub valency: usize,
    pub pass: bool,
    /// Empty unless advising failed.
    pub error: String,
}

/// Runs every cell; a failing cell becomes a failing row.
pub fn sweep(spec: &SweepSpec) -> Vec<ExperimentRecord> {
    let mut cells: Vec<(usize, Option<f64>)> = Vec::new();
    for &n in &spec.n {
        match spec.generator {
            GeneratorKind::Random => cells.push((n, None)),
            GeneratorKind::Diameter => cells.extend(spec.diameter_fraction.iter().map(|&f| (n, Some(f)))),
        }
    }
    let jobs: Vec<(usize, usize, Option<f64>)> =
        cells.iter().flat_map(|&(n, f)| (0..spec.trees).map(move |t| (n, t, f))).collect();
    jobs.par_iter()
        .enumerate()
        .map(|(index, &(n, tree_no, fraction))| {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            rng.set_stream(index as u64);
            let tree = match fraction {
                None => random_tree(n, &mut rng),
                Some(f) => {
                    let d = ((f * n as f64).ceil() as usize).clamp(if n > 2 { 2 } else { n - 1 }, n - 1);
                    random_tree_with_diameter(n, d, &mut rng)
                }
            };
            run_cell(spec, &tree, tree_no)
        })
        .flatten()
        .collect()
}

fn run_cell(spec: &SweepSpec, tree: &PortLabeledTree, tree_no: usize) -> Vec<ExperimentRecord> {
    let n = tree.node_count();
    let diameter = diameter_and_center(tree).diameter;
    spec.taus(diameter)
        .into_iter()
        .map(|tau| {
            let row = |size, valency, pass, error: String| ExperimentRecord {
                scheme: spec.scheme,
                tree: tree_no,
                n,
                diameter,
                tau,
                lambda: spec.lambda,
                size,
                valency,
                pass,
                error,
            };
            match advise(tree, spec.scheme, tau, spec.lambda, spec.c) {
                Ok((advice, scheme)) => {
                    let outcome = run_election(tree, &advice, &scheme, tau);
                    row(outcome.size, outcome.valency, outcome.passed(), String::new())
                }
                Err(e) => row(0, 0, false, e.to_string()),
            }
        })
        .collect()
}

pub fn write_csv<W: std::io::Write, T: Serialize>(out: W, rows: &[T]) -> Result<(), csv::Error> {
    let mut writer = csv::Writer::from_writer(out);
    for r in rows {
        writer.serialize(r)?;
    }
    writer.flush()?;
    Ok(())
}

/// `max(1, ((D - 2τ)/τ) · log₂((n - 2τ)/(D - 2τ)))`, or `D · log₂(n/D)` at τ = 0.
pub fn unbounded_size_bound(n: usize, diameter: usize, tau: usize) -> f64 {
    let (n, d, t) = (n as f64, diameter as f64, tau as f64);
    if tau == 0 {
        return (d * (n / d).log2()).max(1.0);
    }
    if d <= 2.0 * t {
        return 1.0;
    }
    (((d - 2.0 * t) / t) * ((n - 2.0 * t) / (d - 2.0 * t)).log2()).max(1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BetaRecord {
    pub lambda: usize,
    pub c: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub gap: f64,
}

/// Both thresholds on the grid `c = i/(points+1)`, `i = 1..=points`.
pub fn beta_sweep(lambdas: &[usize], points: usize) -> Result<Vec<BetaRecord>, BetaError> {
    let mut grid: Vec<(usize, f64)> = Vec::new();
    for &lambda in lambdas {
        grid.extend((1..=points).map(|i| (lambda, i as f64 / (points + 1) as f64)));
    }
    grid.par_iter()
        .map(|&(lambda, c)| {
            let p = solve_betas(c, lambda)?;
            Ok(BetaRecord { lambda, c, beta1: p.beta1, beta2: p.beta2, gap: p.gap() })
        })
        .collect()
}
