use serde::{Deserialize, Serialize};

use crate::entropy::SampledPdf;
use crate::error::{data, param, Result};

/// Minimum ensemble size for a histogram.
pub const MIN_POSITIONS: usize = 32;
const MAX_BINS: usize = 50_000_000;
/// Interquartile range of the standard normal.
const NORMAL_IQR: f64 = 1.348_979_500_392_163_5;

/// How the histogram bin width is chosen for an entropy curve. The width is
/// the same at every `t`, so the `−ln Δx` offset of extensive indicators is a
/// constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BinRule {
    /// Fixed width.
    Width(f64),
    /// Fraction of the robust scale (IQR / 1.349) of the positions at the
    /// smallest `t` of the grid.
    ScaleFraction(f64),
}

impl Default for BinRule {
    fn default() -> Self {
        BinRule::ScaleFraction(0.25)
    }
}

impl BinRule {
    pub(crate) fn validate(&self) -> Result<()> {
        let v = match *self {
            BinRule::Width(w) => w,
            BinRule::ScaleFraction(f) => f,
        };
        if !(v > 0.0) || !v.is_finite() {
            return Err(param(format!("bin rule parameter must be positive, got {v}")));
        }
        Ok(())
    }
}

/// Spread estimate equal to the standard deviation for Gaussian data but
/// insensitive to heavy tails: IQR / 1.349, falling back to the sample
/// standard deviation when the quartiles coincide.
pub fn robust_scale(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let mut sorted = xs.to_vec();
    sorted.sort_by(f64::total_cmp);
    let q = |p: f64| {
        let pos = p * (sorted.len() - 1) as f64;
        let lo = pos.floor() as usize;
        let hi = pos.ceil() as usize;
        sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
    };
    let iqr = q(0.75) - q(0.25);
    if iqr > 0.0 {
        return iqr / NORMAL_IQR;
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
}

/// Histogram density with a flag for ensembles that collapse onto one point.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityEstimate {
    pub pdf: SampledPdf,
    pub degenerate: bool,
}

/// Histogram of `positions` on bins anchored at integer multiples of
/// `bin_width`, padded by one empty bin on each side and normalized so that
/// `Σ f_i Δx = 1`.
pub fn estimate_pdf(positions: &[f64], bin_width: f64) -> Result<DensityEstimate> {
    if !(bin_width > 0.0) || !bin_width.is_finite() {
        return Err(param(format!("bin width must be positive, got {bin_width}")));
    }
    if positions.len() < MIN_POSITIONS {
        return Err(data(format!(
            "density estimate needs at least {MIN_POSITIONS} positions, got {}",
            positions.len()
        )));
    }
    let (lo, hi) = positions
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        });
    if !lo.is_finite() || !hi.is_finite() {
        return Err(data("positions must be finite"));
    }
    if lo == hi {
        let pdf = SampledPdf::new(lo - 0.5 * bin_width, bin_width, vec![1.0 / bin_width])?;
        return Ok(DensityEstimate { pdf, degenerate: true });
    }
    let first = (lo / bin_width).floor() - 1.0;
    let last = (hi / bin_width).floor() + 1.0;
    let bins = (last - first) as usize + 1;
    if bins > MAX_BINS {
        return Err(data(format!(
            "histogram would need {bins} bins; bin width {bin_width} is too small for the spread"
        )));
    }
    let mut counts = vec![0u64; bins];
    for &x in positions {
        let i = ((x / bin_width).floor() - first) as usize;
        counts[i.min(bins - 1)] += 1;
    }
    let norm = 1.0 / (positions.len() as f64 * bin_width);
    let f = counts.into_iter().map(|c| c as f64 * norm).collect();
    Ok(DensityEstimate {
        pdf: SampledPdf::new(first * bin_width, bin_width, f)?,
        degenerate: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, StandardNormal, Uniform};

    #[test]
    fn constant_positions_are_degenerate() {
        let est = estimate_pdf(&[3.0; 40], 0.5).unwrap();
        assert!(est.degenerate);
        assert_eq!(est.pdf.values().len(), 1);
        assert!((est.pdf.center(0) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn gaussian_histogram_matches_density() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let xs: Vec<f64> = (0..100_000).map(|_| StandardNormal.sample(&mut rng)).collect();
        let est = estimate_pdf(&xs, 0.1).unwrap();
        assert!(!est.degenerate);
        let pdf = &est.pdf;
        let sup = (0..pdf.values().len())
            .map(|i| {
                let x = pdf.center(i);
                // cell average of φ, to second order
                let phi = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
                (pdf.values()[i] - phi).abs()
            })
            .fold(0.0, f64::max);
        assert!(sup < 0.02, "sup-norm deviation {sup}");
    }

    #[test]
    fn uniform_histogram_is_flat() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let u = Uniform::new(0.0, 1.0).unwrap();
        let xs: Vec<f64> = (0..100_000).map(|_| u.sample(&mut rng)).collect();
        let est = estimate_pdf(&xs, 0.05).unwrap();
        for i in 0..est.pdf.values().len() {
            let c = est.pdf.center(i);
            if c > 0.05 && c < 0.95 {
                assert!((est.pdf.values()[i] - 1.0).abs() < 0.1, "bin at {c}");
            }
        }
    }

    #[test]
    fn histogram_is_normalized_and_padded() {
        let xs: Vec<f64> = (0..64).map(|i| i as f64 * 0.37).collect();
        let est = estimate_pdf(&xs, 1.0).unwrap();
        let f = est.pdf.values();
        let mass: f64 = f.iter().sum::<f64>() * est.pdf.dx();
        assert!((mass - 1.0).abs() < 1e-14);
        assert_eq!(f[0], 0.0);
        assert_eq!(f[f.len() - 1], 0.0);
    }

    #[test]
    fn input_checks() {
        assert!(estimate_pdf(&[0.0; 10], 1.0).is_err());
        assert!(estimate_pdf(&[0.0; 40], 0.0).is_err());
    }

    #[test]
    fn robust_scale_of_normal_sample() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let xs: Vec<f64> = (0..50_000)
            .map(|_| {
                let z: f64 = StandardNormal.sample(&mut rng);
                3.0 * z
            })
            .collect();
        assert!((robust_scale(&xs) - 3.0).abs() < 0.05);
    }
}
