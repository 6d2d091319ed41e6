use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::pdf::{estimate_pdf, robust_scale, BinRule};
use super::{build_ensemble, TimeSeries};
use crate::entropy::{continuous_entropy, ContinuousKind, SampledPdf};
use crate::error::{param, Result};

/// Entropy indicator applied to the histogram at each `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "alpha")]
pub enum Indicator {
    Shannon,
    Tsallis(f64),
    Mathai(f64),
    /// `ln(Σ p_i^{2−α}) / (α−1)` with `p_i = f_i Δx`, which equals the
    /// continuous form minus `ln Δx`. `α = 1` gives the Shannon limit.
    MathaiExtensive(f64),
}

impl Indicator {
    pub fn apply(&self, pdf: &SampledPdf) -> Result<f64> {
        match *self {
            Indicator::Shannon => continuous_entropy(ContinuousKind::Shannon, 1.0, pdf),
            Indicator::Tsallis(a) => continuous_entropy(ContinuousKind::Tsallis, a, pdf),
            Indicator::Mathai(a) => continuous_entropy(ContinuousKind::Mathai, a, pdf),
            Indicator::MathaiExtensive(a) => {
                if !(a < 2.0) || !a.is_finite() {
                    return Err(param(format!("Mathai order must be below 2, got {a}")));
                }
                let dx = pdf.dx();
                let s = if a == 1.0 {
                    continuous_entropy(ContinuousKind::Shannon, 1.0, pdf)?
                } else {
                    let sum: f64 = pdf.values().iter().filter(|&&v| v > 0.0).map(|v| v.powf(2.0 - a)).sum();
                    (sum * dx).ln() / (a - 1.0)
                };
                Ok(s - dx.ln())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub t: usize,
    pub s: f64,
}

/// Entropy against window length. `degenerate` marks curves where some
/// ensemble collapsed onto a single point; such curves carry no scaling
/// information.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyCurve {
    pub points: Vec<CurvePoint>,
    pub bin_width: f64,
    pub degenerate: bool,
}

/// Roughly 25 geometrically spaced window lengths in `[10, N/10]`. Short
/// series fall back to `[1, N/4]`.
pub fn default_t_grid(n: usize) -> Vec<usize> {
    let (lo, hi) = if n / 10 >= 20 {
        (10, n / 10)
    } else {
        (1, (n / 4).max(1))
    };
    let (llo, lhi) = ((lo as f64).ln(), (hi as f64).ln());
    let mut grid: Vec<usize> = (0..25)
        .map(|k| (llo + (lhi - llo) * k as f64 / 24.0).exp().round() as usize)
        .collect();
    grid.dedup();
    grid
}

/// Builds the ensemble, histogram and indicator for every `t` of the grid.
/// Evaluation runs in parallel; the result is in grid order and does not
/// depend on scheduling.
pub fn entropy_curve(
    series: &TimeSeries,
    indicator: Indicator,
    t_grid: &[usize],
    bin_rule: BinRule,
) -> Result<EntropyCurve> {
    series.check_t_grid(t_grid)?;
    bin_rule.validate()?;
    let bin_width = match bin_rule {
        BinRule::Width(w) => w,
        BinRule::ScaleFraction(frac) => {
            let first = build_ensemble(series, t_grid[0])?;
            let scale = robust_scale(&first.positions);
            if scale > 0.0 {
                frac * scale
            } else {
                frac
            }
        }
    };
    let evaluated = t_grid
        .par_iter()
        .map(|&t| {
            let ensemble = build_ensemble(series, t)?;
            let est = estimate_pdf(&ensemble.positions, bin_width)?;
            Ok((
                CurvePoint {
                    t,
                    s: indicator.apply(&est.pdf)?,
                },
                est.degenerate,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let degenerate = evaluated.iter().any(|(_, d)| *d);
    Ok(EntropyCurve {
        points: evaluated.into_iter().map(|(p, _)| p).collect(),
        bin_width,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dea::{fit_delta, generate, SeriesKind};

    #[test]
    fn default_grid_shape() {
        let g = default_t_grid(1 << 16);
        assert_eq!(g[0], 10);
        assert_eq!(*g.last().unwrap(), (1 << 16) / 10);
        assert!(g.len() >= 20 && g.len() <= 25);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        let small = default_t_grid(64);
        assert_eq!(small[0], 1);
        assert_eq!(*small.last().unwrap(), 16);
    }

    #[test]
    fn constant_series_is_flagged() {
        let s = TimeSeries::new(vec![1.5; 256]).unwrap();
        let c = entropy_curve(&s, Indicator::Shannon, &[1, 2, 4, 8], BinRule::default()).unwrap();
        assert!(c.degenerate);
        assert!(fit_delta(&c, 1, 8).is_err());
    }

    #[test]
    fn extensive_indicator_tracks_bin_width() {
        let s = generate(SeriesKind::Gaussian { diffusion: 0.5 }, 1 << 14, 21).unwrap();
        let grid = default_t_grid(s.len());
        let a = entropy_curve(&s, Indicator::MathaiExtensive(0.8), &grid, BinRule::Width(0.5)).unwrap();
        let b = entropy_curve(&s, Indicator::MathaiExtensive(0.8), &grid, BinRule::Width(1.0)).unwrap();
        for (p, q) in a.points.iter().zip(&b.points) {
            assert!((q.s - p.s + std::f64::consts::LN_2).abs() < 0.05, "t = {}", p.t);
        }
    }

    #[test]
    fn parallel_evaluation_is_deterministic() {
        let s = generate(SeriesKind::Stable { index: 1.5 }, 1 << 13, 8).unwrap();
        let grid = default_t_grid(s.len());
        let a = entropy_curve(&s, Indicator::Tsallis(1.2), &grid, BinRule::default()).unwrap();
        let b = entropy_curve(&s, Indicator::Tsallis(1.2), &grid, BinRule::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn indicator_order_checks() {
        let s = generate(SeriesKind::Gaussian { diffusion: 0.5 }, 256, 1).unwrap();
        assert!(entropy_curve(&s, Indicator::MathaiExtensive(2.0), &[1, 2], BinRule::default()).is_err());
        assert!(entropy_curve(&s, Indicator::Tsallis(1.0), &[1, 2], BinRule::default()).is_err());
        assert!(entropy_curve(&s, Indicator::Shannon, &[1, 2], BinRule::Width(-1.0)).is_err());
    }
}
