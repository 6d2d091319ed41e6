use serde::{Deserialize, Serialize};

use super::curve::EntropyCurve;
use crate::error::{data, param, Result};
use crate::linalg::solve3;

pub const MIN_LINEAR_POINTS: usize = 8;
pub const MIN_QUADRATIC_POINTS: usize = 10;

pub(crate) struct Line {
    pub slope: f64,
    pub intercept: f64,
    pub residual_rms: f64,
}

/// Ordinary least squares `y = intercept + slope·x`.
pub(crate) fn least_squares_line(xy: &[(f64, f64)]) -> Line {
    let n = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / n;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = xy.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    Line {
        slope,
        intercept,
        residual_rms: (ss / n).sqrt(),
    }
}

/// `S(t) = A + δ ln t` fitted over a window of the curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalingFit {
    pub delta: f64,
    pub intercept: f64,
    pub t_range: (usize, usize),
    pub residual_rms: f64,
    pub n_points: usize,
}

fn check_curve(curve: &EntropyCurve) -> Result<()> {
    if curve.degenerate {
        return Err(data("entropy curve is degenerate (an ensemble collapsed to one point)"));
    }
    if let Some(p) = curve.points.iter().find(|p| !p.s.is_finite()) {
        return Err(data(format!("entropy is not finite at t = {}", p.t)));
    }
    Ok(())
}

/// Least squares of `S` against `ln t` for the points with `t_min ≤ t ≤ t_max`.
pub fn fit_delta(curve: &EntropyCurve, t_min: usize, t_max: usize) -> Result<ScalingFit> {
    if t_min > t_max {
        return Err(param(format!("empty fit range [{t_min}, {t_max}]")));
    }
    check_curve(curve)?;
    let xy: Vec<(f64, f64)> = curve
        .points
        .iter()
        .filter(|p| p.t >= t_min && p.t <= t_max)
        .map(|p| ((p.t as f64).ln(), p.s))
        .collect();
    if xy.len() < MIN_LINEAR_POINTS {
        return Err(data(format!(
            "scaling fit needs {MIN_LINEAR_POINTS} points in [{t_min}, {t_max}], found {}",
            xy.len()
        )));
    }
    let line = least_squares_line(&xy);
    Ok(ScalingFit {
        delta: line.slope,
        intercept: line.intercept,
        t_range: (t_min, t_max),
        residual_rms: line.residual_rms,
        n_points: xy.len(),
    })
}

/// `S = b₀ + δ₀τ + η τ²` with `τ = ln t`, describing a scaling exponent that
/// drifts as `δ(t) = δ₀ + η ln t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NonstationaryFit {
    pub b0: f64,
    pub delta0: f64,
    pub eta_ns: f64,
    pub residual_rms: f64,
    /// Whether `η ln t < 1 − δ₀` over the whole fitted range.
    pub ballistic_ok: bool,
}

/// Quadratic least squares over every point of the curve.
pub fn fit_nonstationary(curve: &EntropyCurve) -> Result<NonstationaryFit> {
    check_curve(curve)?;
    let pts = &curve.points;
    if pts.len() < MIN_QUADRATIC_POINTS {
        return Err(data(format!(
            "quadratic fit needs {MIN_QUADRATIC_POINTS} points, found {}",
            pts.len()
        )));
    }
    let taus: Vec<f64> = pts.iter().map(|p| (p.t as f64).ln()).collect();
    let m = taus.iter().sum::<f64>() / taus.len() as f64;
    let mut ata = [[0.0; 3]; 3];
    let mut atb = [0.0; 3];
    for (tau, p) in taus.iter().zip(pts) {
        let u = tau - m;
        let row = [1.0, u, u * u];
        for i in 0..3 {
            for j in 0..3 {
                ata[i][j] += row[i] * row[j];
            }
            atb[i] += row[i] * p.s;
        }
    }
    let [c0, c1, c2] = solve3(ata, atb)?;
    let ss: f64 = taus
        .iter()
        .zip(pts)
        .map(|(tau, p)| {
            let u = tau - m;
            (p.s - c0 - c1 * u - c2 * u * u).powi(2)
        })
        .sum();
    let delta0 = c1 - 2.0 * c2 * m;
    let eta_ns = c2;
    let ballistic_ok = [taus[0], taus[taus.len() - 1]]
        .iter()
        .all(|tau| eta_ns * tau < 1.0 - delta0);
    Ok(NonstationaryFit {
        b0: c0 - c1 * m + c2 * m * m,
        delta0,
        eta_ns,
        residual_rms: (ss / pts.len() as f64).sqrt(),
        ballistic_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dea::curve::CurvePoint;

    fn curve_of(ts: &[usize], s: impl Fn(f64) -> f64) -> EntropyCurve {
        EntropyCurve {
            points: ts
                .iter()
                .map(|&t| CurvePoint {
                    t,
                    s: s((t as f64).ln()),
                })
                .collect(),
            bin_width: 1.0,
            degenerate: false,
        }
    }

    #[test]
    fn exact_line() {
        let c = curve_of(&[10, 15, 22, 33, 50, 75, 110, 165, 250], |tau| 1.0 + 0.5 * tau);
        let f = fit_delta(&c, 10, 300).unwrap();
        assert!((f.delta - 0.5).abs() < 1e-12);
        assert!((f.intercept - 1.0).abs() < 1e-12);
        assert!(f.residual_rms < 1e-12);
        assert_eq!(f.n_points, 9);
        assert!(fit_delta(&c, 10, 100).is_err());
    }

    #[test]
    fn exact_quadratic() {
        let ts: Vec<usize> = (0..20).map(|k| 10 * (1 << (k / 2)) + k).collect();
        let c = curve_of(&ts, |tau| 1.0 + 0.4 * tau + 0.02 * tau * tau);
        let f = fit_nonstationary(&c).unwrap();
        assert!((f.b0 - 1.0).abs() < 1e-10);
        assert!((f.delta0 - 0.4).abs() < 1e-10);
        assert!((f.eta_ns - 0.02).abs() < 1e-10);
        assert!(f.ballistic_ok);
    }

    #[test]
    fn ballistic_bound_is_reported() {
        let ts: Vec<usize> = (1..=12).map(|k| 1 << k).collect();
        let c = curve_of(&ts, |tau| 0.9 * tau + 0.1 * tau * tau);
        assert!(!fit_nonstationary(&c).unwrap().ballistic_ok);
    }

    #[test]
    fn too_few_points() {
        let c = curve_of(&[10, 20, 40, 80, 160, 320, 640, 1280, 2560], |tau| tau);
        assert!(matches!(fit_nonstationary(&c), Err(crate::Error::Data(_))));
    }
}
