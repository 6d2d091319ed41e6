//! Diffusion entropy analysis (DEA) and variance scaling of time series.
//!
//! A series `ξ_1 … ξ_N` is turned into a diffusion process by overlapping
//! window sums `x_s(t) = ξ_s + … + ξ_{s+t−1}`. For a scaling process
//! `p(x,t) = t^{−δ} F(x / t^δ)` every entropy indicator grows as `A + δ ln t`,
//! while the variance grows as `t^{2H}`. Comparing δ with H separates
//! fractional Brownian noise (`H = δ`) from Lévy walks (`δ = 1/(3−2H)`).

mod curve;
mod fit;
mod generate;
mod pdf;

pub use curve::{default_t_grid, entropy_curve, CurvePoint, EntropyCurve, Indicator};
pub use fit::{fit_delta, fit_nonstationary, NonstationaryFit, ScalingFit};
pub use generate::{generate, SeriesKind};
pub use pdf::{estimate_pdf, robust_scale, BinRule, DensityEstimate};

use serde::{Deserialize, Serialize};

use crate::error::{data, domain, param, Result};

/// Minimum series length for the analysis operations.
pub const MIN_ANALYSIS_LEN: usize = 64;

/// A finite-valued time series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    xi: Vec<f64>,
}

impl TimeSeries {
    pub fn new(xi: Vec<f64>) -> Result<Self> {
        if xi.is_empty() {
            return Err(data("time series is empty"));
        }
        if let Some(pos) = xi.iter().position(|v| !v.is_finite()) {
            return Err(data(format!("time series value {pos} is not finite")));
        }
        Ok(Self { xi })
    }

    pub fn values(&self) -> &[f64] {
        &self.xi
    }

    pub fn len(&self) -> usize {
        self.xi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xi.is_empty()
    }

    pub(crate) fn require_analysis_length(&self) -> Result<()> {
        if self.len() < MIN_ANALYSIS_LEN {
            return Err(data(format!(
                "analysis needs at least {MIN_ANALYSIS_LEN} samples, got {}",
                self.len()
            )));
        }
        Ok(())
    }

    /// Checks an analysis time grid: strictly ascending, `1 ≤ t ≤ N/4`.
    pub(crate) fn check_t_grid(&self, t_grid: &[usize]) -> Result<()> {
        self.require_analysis_length()?;
        if t_grid.is_empty() {
            return Err(param("time grid is empty"));
        }
        let limit = self.len() / 4;
        for w in t_grid.windows(2) {
            if w[1] <= w[0] {
                return Err(param(format!(
                    "time grid must be strictly ascending ({} then {})",
                    w[0], w[1]
                )));
            }
        }
        if t_grid[0] < 1 || t_grid[t_grid.len() - 1] > limit {
            return Err(param(format!(
                "time grid must lie in [1, N/4 = {limit}], got [{}, {}]",
                t_grid[0],
                t_grid[t_grid.len() - 1]
            )));
        }
        Ok(())
    }
}

/// Window sums `x_s(t)` for `s = 1 … N−t+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionEnsemble {
    pub t: usize,
    pub positions: Vec<f64>,
}

/// Overlapping-window trajectory positions at time `t` (`1 ≤ t ≤ N`).
pub fn build_ensemble(series: &TimeSeries, t: usize) -> Result<DiffusionEnsemble> {
    let n = series.len();
    if t < 1 || t > n {
        return Err(param(format!("window length must lie in [1, {n}], got {t}")));
    }
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0.0);
    let mut acc = 0.0;
    for v in &series.xi {
        acc += v;
        prefix.push(acc);
    }
    let positions = (0..=n - t).map(|s| prefix[s + t] - prefix[s]).collect();
    Ok(DiffusionEnsemble { t, positions })
}

/// Sample variance (n−1 denominator).
fn variance(xs: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)
}

/// Hurst exponent from the variance growth `σ²(t) ∼ t^{2H}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HurstFit {
    pub hurst: f64,
    /// Least-squares intercept of `ln σ²` against `ln t`.
    pub intercept: f64,
    pub residual_rms: f64,
}

/// Least squares of `ln σ²(t)` against `ln t`; `H` is half the slope.
pub fn hurst_from_variances(points: &[(usize, f64)]) -> Result<HurstFit> {
    if points.len() < 2 {
        return Err(data("variance scaling needs at least two times"));
    }
    if let Some(&(t, _)) = points.iter().find(|(_, v)| !(*v > 0.0)) {
        return Err(data(format!("trajectory variance vanishes at t = {t}")));
    }
    let xy: Vec<(f64, f64)> = points.iter().map(|&(t, v)| ((t as f64).ln(), v.ln())).collect();
    let line = fit::least_squares_line(&xy);
    Ok(HurstFit {
        hurst: 0.5 * line.slope,
        intercept: line.intercept,
        residual_rms: line.residual_rms,
    })
}

/// Variance scaling analysis over `t_grid`.
pub fn variance_scaling(series: &TimeSeries, t_grid: &[usize]) -> Result<HurstFit> {
    series.check_t_grid(t_grid)?;
    let points = t_grid
        .iter()
        .map(|&t| build_ensemble(series, t).map(|e| (t, variance(&e.positions))))
        .collect::<Result<Vec<_>>>()?;
    hurst_from_variances(&points)
}

/// Pdf scaling exponent of a Lévy walk with Hurst exponent `h`: `1/(3−2H)`.
pub fn levy_walk_delta(h: f64) -> Result<f64> {
    if !(h < 1.5) {
        return Err(domain(format!("Lévy walk relation has a pole at H = 1.5, got H = {h}")));
    }
    Ok(1.0 / (3.0 - 2.0 * h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingClass {
    /// `H = δ`: fractional Brownian noise.
    FractionalBrownian,
    /// `δ = 1/(3−2H)`: Lévy walk.
    LevyWalk,
    Other,
}

/// Joint reading of the variance and entropy exponents.
pub fn classify(h: f64, delta: f64, tol: f64) -> ScalingClass {
    if (h - delta).abs() <= tol {
        return ScalingClass::FractionalBrownian;
    }
    match levy_walk_delta(h) {
        Ok(d) if (delta - d).abs() <= tol => ScalingClass::LevyWalk,
        _ => ScalingClass::Other,
    }
}
