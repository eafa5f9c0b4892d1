//! The two thresholds on `τ/D` that bracket what bounded valency can do for
//! a diameter of `c·n`: below `β₁` no constant number of advice strings
//! suffices, above `β₂` a constant number does.

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BetaPair {
    pub beta1: f64,
    pub beta2: f64,
    /// How many sign changes each defining equation showed on the grid.
    pub beta1_roots: usize,
    pub beta2_roots: usize,
}

impl BetaPair {
    pub fn gap(&self) -> f64 {
        self.beta2 - self.beta1
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BetaError {
    #[error("no root of the {which} equation in (0, 1/2) for c = {c}, λ = {lambda}")]
    NoRoot { which: &'static str, c: f64, lambda: usize },
    #[error("need 0 < c < 1 and λ ≥ 2, got c = {c}, λ = {lambda}")]
    BadInput { c: f64, lambda: usize },
}

const GRID: usize = 20_000;
const TOLERANCE: f64 = 1e-9;

/// Slack used by both thresholds, `(1 - c)/200`.
pub fn slack(c: f64) -> f64 {
    (1.0 - c) / 200.0
}

/// Right-hand side of the lower threshold's fixed-point equation.
pub fn lower_map(beta: f64, c: f64, lambda: usize) -> f64 {
    let eps = slack(c);
    let l = (lambda as f64).ln();
    (1.0 - 2.0 * beta) / 2.0 * ((0.5 - beta * c) / (c / 2.0 - beta * c + eps)).ln() / l
}

/// Right-hand side of the upper threshold's fixed-point equation.
pub fn upper_map(beta: f64, c: f64, lambda: usize) -> f64 {
    let eps = slack(c);
    let l = (lambda as f64).ln();
    2.0 * (0.5 - beta + 2.0 * eps) * (((1.0 - c / 2.0 + eps) / (c / 2.0 - beta * c)).ln() / l + 1.0)
}

/// Roots of `g` on the open interval `(0, 1/2)`, each refined by bisection.
fn roots(g: impl Fn(f64) -> f64) -> Vec<f64> {
    let xs: Vec<f64> = (1..GRID).map(|i| 0.5 * i as f64 / GRID as f64).collect();
    let mut out = Vec::new();
    for w in xs.windows(2) {
        let (mut a, mut b) = (w[0], w[1]);
        let (mut ga, gb) = (g(a), g(b));
        if !(ga.is_finite() && gb.is_finite()) || ga.signum() == gb.signum() && ga != 0.0 {
            continue;
        }
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            let gm = g(m);
            if gm == 0.0 || (b - a) < 1e-15 {
                a = m;
                b = m;
                break;
            }
            if gm.signum() == ga.signum() {
                a = m;
                ga = gm;
            } else {
                b = m;
            }
        }
        let root = 0.5 * (a + b);
        if g(root).abs() < TOLERANCE && out.last().is_none_or(|&r: &f64| root - r > 1e-12) {
            out.push(root);
        }
    }
    out
}

/// Solves `β = lower_map(β)` (smallest root) and `β = upper_map(β)` (largest root).
pub fn solve_betas(c: f64, lambda: usize) -> Result<BetaPair, BetaError> {
    if !(c > 0.0 && c < 1.0) || lambda < 2 {
        return Err(BetaError::BadInput { c, lambda });
    }
    let low = roots(|b| lower_map(b, c, lambda) - b);
    let high = roots(|b| upper_map(b, c, lambda) - b);
    let beta1 = *low.first().ok_or(BetaError::NoRoot { which: "lower", c, lambda })?;
    let beta2 = *high.last().ok_or(BetaError::NoRoot { which: "upper", c, lambda })?;
    Ok(BetaPair { beta1, beta2, beta1_roots: low.len(), beta2_roots: high.len() })
}
