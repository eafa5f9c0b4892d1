//! Family descriptor files: a `regime` tag and `key = value` lines.
//!
//! `regime = "line"` takes `n_prime`, `diameter`, `tau`. The other tags take
//! `diameter` plus either `n_prime` with the regime constants (`alpha` and
//! `epsilon`, `alpha` and `b`, or `beta`) to fill the defaults, or explicit
//! `tau`, `k1`, `k2`, `z`, `z_prime`; explicit values win.

use serde::Deserialize;

use super::{FamilyError, GeneralFamilyParams, LineFamilyParams, Regime};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FamilySpec {
    Line(LineFamilyParams),
    General(GeneralFamilyParams),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    regime: String,
    diameter: usize,
    n_prime: Option<usize>,
    alpha: Option<f64>,
    epsilon: Option<f64>,
    b: Option<f64>,
    beta: Option<f64>,
    tau: Option<usize>,
    k1: Option<usize>,
    k2: Option<usize>,
    z: Option<usize>,
    z_prime: Option<usize>,
}

fn need<T>(value: Option<T>, key: &str) -> Result<T, FamilyError> {
    value.ok_or_else(|| FamilyError::BadParams(format!("descriptor lacks `{key}`")))
}

pub fn parse_family(text: &str) -> Result<FamilySpec, FamilyError> {
    let raw: Raw = toml::from_str(text).map_err(|e| FamilyError::BadParams(e.to_string()))?;
    let d = raw.diameter;
    let defaults = |regime: Regime| -> Result<GeneralFamilyParams, FamilyError> {
        let from_formulas = match (raw.n_prime, regime) {
            (Some(n), Regime::Small { epsilon }) => Some(GeneralFamilyParams::small(n, d, need(raw.alpha, "alpha")?, epsilon)),
            (Some(n), Regime::Medium { b }) => Some(GeneralFamilyParams::medium(n, d, need(raw.alpha, "alpha")?, b)),
            (Some(n), Regime::Large { beta }) => Some(GeneralFamilyParams::large(n, d, beta)),
            (None, _) => None,
        };
        let base = from_formulas.unwrap_or(GeneralFamilyParams { diameter: d, tau: 0, k1: 1, k2: 2, z: 1, z_prime: 0, regime });
        let p = GeneralFamilyParams {
            tau: raw.tau.unwrap_or(base.tau),
            k1: raw.k1.unwrap_or(base.k1),
            k2: raw.k2.unwrap_or(base.k2),
            z: raw.z.unwrap_or(base.z),
            z_prime: raw.z_prime.unwrap_or(base.z_prime),
            ..base
        };
        if from_formulas.is_none() {
            need(raw.tau, "tau")?;
            need(raw.z, "z")?;
        }
        Ok(p)
    };
    match raw.regime.as_str() {
        "line" => Ok(FamilySpec::Line(LineFamilyParams {
            n_prime: need(raw.n_prime, "n_prime")?,
            diameter: d,
            tau: need(raw.tau, "tau")?,
        })),
        "small" => defaults(Regime::Small { epsilon: raw.epsilon.unwrap_or(0.1) }).map(FamilySpec::General),
        "medium" => defaults(Regime::Medium { b: raw.b.unwrap_or(0.05) }).map(FamilySpec::General),
        "large" => defaults(Regime::Large { beta: raw.beta.unwrap_or(0.2) }).map(FamilySpec::General),
        other => Err(FamilyError::BadParams(format!("unknown regime {other:?}"))),
    }
}
