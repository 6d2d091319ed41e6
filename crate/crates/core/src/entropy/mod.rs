//! Entropy functionals of the generalized family.
//!
//! Discrete measures act on a [`DiscreteDistribution`], continuous ones on a
//! [`SampledPdf`] through the midpoint rule. The Boltzmann constant is 1 and
//! `0 · ln 0 = 0`: empty cells are skipped in every sum.

mod pathway_density;

pub use pathway_density::{maximality_witness, pathway_density_make, MaximalityReport, PathwayBranch, PathwayDensity};

use serde::{Deserialize, Serialize};

use crate::error::{data, domain, param, Result};

/// Tolerance on `Σ p_i = 1`.
pub const DISCRETE_NORM_TOL: f64 = 1e-12;
/// Tolerance on `Σ f_i dx = 1`.
pub const PDF_NORM_TOL: f64 = 1e-6;
/// Largest `|ε|` accepted by [`mathai_expansion`].
pub const EXPANSION_MAX_EPS: f64 = 0.2;

/// Probability vector `p_i ≥ 0` with unit sum.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    p: Vec<f64>,
}

impl DiscreteDistribution {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(data("distribution is empty"));
        }
        if let Some(bad) = p.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
            return Err(data(format!(
                "probabilities must be finite and non-negative, found {bad}"
            )));
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > DISCRETE_NORM_TOL {
            return Err(data(format!("probabilities sum to {total}, not 1")));
        }
        Ok(Self { p })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.p
    }

    /// Joint distribution of two independent systems, `p_i q_j` in row-major order.
    pub fn product(&self, other: &Self) -> Self {
        let p = self.p.iter().flat_map(|a| other.p.iter().map(move |b| a * b)).collect();
        Self { p }
    }

    fn power_sum(&self, q: f64) -> f64 {
        self.p.iter().filter(|&&v| v > 0.0).map(|v| v.powf(q)).sum()
    }
}

/// Density values `f_i` on the uniform grid of cells `[x0 + i dx, x0 + (i+1) dx]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledPdf {
    x0: f64,
    dx: f64,
    f: Vec<f64>,
}

impl SampledPdf {
    pub fn new(x0: f64, dx: f64, f: Vec<f64>) -> Result<Self> {
        if !(dx > 0.0) || !dx.is_finite() || !x0.is_finite() {
            return Err(data(format!(
                "grid needs finite origin and dx > 0, got x0={x0}, dx={dx}"
            )));
        }
        if f.is_empty() {
            return Err(data("density has no cells"));
        }
        if let Some(bad) = f.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
            return Err(data(format!(
                "density values must be finite and non-negative, found {bad}"
            )));
        }
        let mass: f64 = f.iter().sum::<f64>() * dx;
        if (mass - 1.0).abs() > PDF_NORM_TOL {
            return Err(data(format!("density integrates to {mass}, not 1")));
        }
        Ok(Self { x0, dx, f })
    }

    /// Samples `density` at the midpoints of `cells` equal cells covering `[lo, hi]`.
    pub fn from_fn(lo: f64, hi: f64, cells: usize, density: impl Fn(f64) -> f64) -> Result<Self> {
        if !(hi > lo) || cells == 0 {
            return Err(data(format!("grid [{lo}, {hi}] with {cells} cells is empty")));
        }
        let dx = (hi - lo) / cells as f64;
        let f = (0..cells).map(|i| density(lo + (i as f64 + 0.5) * dx)).collect();
        Self::new(lo, dx, f)
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn values(&self) -> &[f64] {
        &self.f
    }

    /// Midpoint of cell `i`.
    pub fn center(&self, i: usize) -> f64 {
        self.x0 + (i as f64 + 0.5) * self.dx
    }

    /// Midpoint-rule `∫ g(f(x)) dx` over non-empty cells.
    fn integrate(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.f.iter().filter(|&&v| v > 0.0).map(|&v| g(v)).sum::<f64>() * self.dx
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscreteKind {
    Shannon,
    Renyi,
    HavrdaCharvat,
    Tsallis,
    Mathai,
    MathaiExtensive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContinuousKind {
    Shannon,
    Tsallis,
    Mathai,
}

fn check_order_positive(alpha: f64) -> Result<()> {
    if !(alpha > 0.0) || alpha == 1.0 || !alpha.is_finite() {
        return Err(param(format!("order must satisfy α > 0, α ≠ 1; got {alpha}")));
    }
    Ok(())
}

fn check_order_mathai(alpha: f64) -> Result<()> {
    if !(alpha < 2.0) || alpha == 1.0 || !alpha.is_finite() {
        return Err(param(format!("Mathai order must satisfy α < 2, α ≠ 1; got {alpha}")));
    }
    Ok(())
}

/// Entropy of a discrete distribution. `alpha` is ignored for Shannon.
///
/// * Rényi: `ln Σp^α / (1−α)`
/// * Havrda–Charvát: `(Σp^α − 1) / (2^{1−α} − 1)`
/// * Tsallis: `(1 − Σp^α) / (α − 1)`
/// * Mathai: `(Σp^{2−α} − 1) / (α − 1)`
/// * Mathai extensive: `ln Σp^{2−α} / (α − 1)`
pub fn discrete_entropy(kind: DiscreteKind, alpha: f64, p: &DiscreteDistribution) -> Result<f64> {
    match kind {
        DiscreteKind::Shannon => Ok(-p.p.iter().filter(|&&v| v > 0.0).map(|v| v * v.ln()).sum::<f64>()),
        DiscreteKind::Renyi => {
            check_order_positive(alpha)?;
            Ok(p.power_sum(alpha).ln() / (1.0 - alpha))
        }
        DiscreteKind::HavrdaCharvat => {
            check_order_positive(alpha)?;
            Ok((p.power_sum(alpha) - 1.0) / ((1.0 - alpha).exp2() - 1.0))
        }
        DiscreteKind::Tsallis => {
            check_order_positive(alpha)?;
            Ok((1.0 - p.power_sum(alpha)) / (alpha - 1.0))
        }
        DiscreteKind::Mathai => {
            check_order_mathai(alpha)?;
            Ok((p.power_sum(2.0 - alpha) - 1.0) / (alpha - 1.0))
        }
        DiscreteKind::MathaiExtensive => {
            check_order_mathai(alpha)?;
            Ok(p.power_sum(2.0 - alpha).ln() / (alpha - 1.0))
        }
    }
}

/// Entropy of a gridded density by the midpoint rule.
pub fn continuous_entropy(kind: ContinuousKind, alpha: f64, pdf: &SampledPdf) -> Result<f64> {
    match kind {
        ContinuousKind::Shannon => Ok(-pdf.integrate(|v| v * v.ln())),
        ContinuousKind::Tsallis => {
            check_order_positive(alpha)?;
            Ok((1.0 - pdf.integrate(|v| v.powf(alpha))) / (alpha - 1.0))
        }
        ContinuousKind::Mathai => {
            check_order_mathai(alpha)?;
            Ok((pdf.integrate(|v| v.powf(2.0 - alpha)) - 1.0) / (alpha - 1.0))
        }
    }
}

/// Closed-form Tsallis or Mathai entropy of the Brownian density
/// `p(x,t) = (πt)^{−1/2} exp(−x²/t)`; `alpha = 1` gives `½ + ½ ln(πt)`.
pub fn gaussian_entropy_closed(kind: ContinuousKind, alpha: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain(format!("time must be positive, got {t}")));
    }
    let pi_t = std::f64::consts::PI * t;
    if alpha == 1.0 {
        return Ok(0.5 + 0.5 * pi_t.ln());
    }
    match kind {
        ContinuousKind::Shannon => Ok(0.5 + 0.5 * pi_t.ln()),
        ContinuousKind::Tsallis => {
            if !(alpha > 0.0) {
                return Err(param(format!("Tsallis order must be positive, got {alpha}")));
            }
            let integral = pi_t.powf(0.5 * (1.0 - alpha)) / alpha.sqrt();
            Ok((1.0 - integral) / (alpha - 1.0))
        }
        ContinuousKind::Mathai => {
            if !(alpha < 2.0) {
                return Err(param(format!("Mathai order must be below 2, got {alpha}")));
            }
            let integral = pi_t.powf(0.5 * (alpha - 1.0)) / (2.0 - alpha).sqrt();
            Ok((integral - 1.0) / (alpha - 1.0))
        }
    }
}

/// First-order expansion of Mathai's entropy about the Shannon limit,
/// `−∫p ln p + (ε/2) ∫p (ln p)²` with `ε = α − 1`.
pub fn mathai_expansion(pdf: &SampledPdf, epsilon: f64) -> Result<f64> {
    if !(epsilon.abs() <= EXPANSION_MAX_EPS) {
        return Err(param(format!(
            "expansion needs |ε| ≤ {EXPANSION_MAX_EPS}, got {epsilon}"
        )));
    }
    let shannon = -pdf.integrate(|v| v * v.ln());
    if epsilon == 0.0 {
        return Ok(shannon);
    }
    let second = pdf.integrate(|v| {
        let l = v.ln();
        v * l * l
    });
    Ok(shannon + 0.5 * epsilon * second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn half_half() -> DiscreteDistribution {
        DiscreteDistribution::new(vec![0.5, 0.5]).unwrap()
    }

    fn gaussian_grid(t: f64) -> SampledPdf {
        let norm = 1.0 / (PI * t).sqrt();
        let half = 8.0 * t.sqrt();
        let cells = (2.0 * half * 512.0).round() as usize;
        SampledPdf::from_fn(-half, half, cells, |x| norm * (-x * x / t).exp()).unwrap()
    }

    #[test]
    fn shannon_of_fair_coin() {
        let h = discrete_entropy(DiscreteKind::Shannon, 0.0, &half_half()).unwrap();
        assert!((h - LN_2).abs() < 1e-15);
    }

    #[test]
    fn mathai_of_fair_coin() {
        // direct evaluation: (2 (1/2)^{1.5} − 1) / (−0.5)
        let oracle = (2.0 * 0.5f64.powf(1.5) - 1.0) / -0.5;
        let m = discrete_entropy(DiscreteKind::Mathai, 0.5, &half_half()).unwrap();
        assert!((m - oracle).abs() < 1e-15);
        assert!((m - 0.585_786_437_626_904_9).abs() < 1e-12);
    }

    #[test]
    fn degenerate_distribution_has_zero_extensive_entropy() {
        let p = DiscreteDistribution::new(vec![1.0, 0.0]).unwrap();
        for alpha in [-3.0, 0.2, 0.9, 1.5] {
            assert_eq!(discrete_entropy(DiscreteKind::MathaiExtensive, alpha, &p).unwrap(), 0.0);
        }
    }

    #[test]
    fn order_ranges_are_enforced() {
        let p = half_half();
        assert!(discrete_entropy(DiscreteKind::Renyi, 1.0, &p).is_err());
        assert!(discrete_entropy(DiscreteKind::Tsallis, -0.5, &p).is_err());
        assert!(discrete_entropy(DiscreteKind::HavrdaCharvat, 0.0, &p).is_err());
        assert!(discrete_entropy(DiscreteKind::Mathai, 2.0, &p).is_err());
        assert!(discrete_entropy(DiscreteKind::MathaiExtensive, 1.0, &p).is_err());
        assert!(discrete_entropy(DiscreteKind::Mathai, -4.0, &p).is_ok());
    }

    #[test]
    fn distribution_validation() {
        assert!(DiscreteDistribution::new(vec![0.5, 0.6]).is_err());
        assert!(DiscreteDistribution::new(vec![1.5, -0.5]).is_err());
        assert!(DiscreteDistribution::new(vec![]).is_err());
    }

    #[test]
    fn unnormalized_pdf_is_a_data_error() {
        let err = SampledPdf::new(0.0, 0.1, vec![1.0; 11]).unwrap_err();
        assert!(matches!(err, crate::Error::Data(_)));
    }

    #[test]
    fn gridded_gaussian_matches_closed_forms() {
        let pdf = gaussian_grid(1.0);
        let s = continuous_entropy(ContinuousKind::Shannon, 1.0, &pdf).unwrap();
        assert!((s - (0.5 + 0.5 * PI.ln())).abs() < 1e-4);
        // closed forms evaluated at 50 digits
        let m = continuous_entropy(ContinuousKind::Mathai, 1.2, &pdf).unwrap();
        assert!((m - 1.268_158_909_493_443_363_1).abs() < 1e-4);
        let ts = continuous_entropy(ContinuousKind::Tsallis, 1.2, &pdf).unwrap();
        assert!((ts - 0.929_344_082_941_659_797_16).abs() < 1e-4);
    }

    #[test]
    fn closed_form_values() {
        let c = gaussian_entropy_closed(ContinuousKind::Mathai, 1.0, 1.0).unwrap();
        assert!((c - 1.072_364_942_924_700_1).abs() < 1e-14);
        let m = gaussian_entropy_closed(ContinuousKind::Mathai, 1.2, 1.0).unwrap();
        assert!((m - 1.268_158_909_493_443_363_1).abs() < 1e-14);
        let t = gaussian_entropy_closed(ContinuousKind::Tsallis, 0.8, 1.0).unwrap();
        assert!((t - 1.268_158_909_493_443_363_1).abs() < 1e-14);
        assert!(gaussian_entropy_closed(ContinuousKind::Tsallis, 0.8, 0.0).is_err());
    }

    #[test]
    fn tsallis_closed_form_against_quadrature() {
        // independent route: tanh-sinh quadrature of ∫ p^α over the real line
        let alpha = 0.8;
        let p = |x: f64| (-x * x).exp() / PI.sqrt();
        let integral = crate::quadrature::integrate(|x| p(x).powf(alpha), -30.0, 30.0, 1e-13)
            .unwrap()
            .value;
        let quad = (1.0 - integral) / (alpha - 1.0);
        let closed = gaussian_entropy_closed(ContinuousKind::Tsallis, alpha, 1.0).unwrap();
        assert!((quad - closed).abs() < 1e-11);
    }

    #[test]
    fn expansion_reduces_to_shannon_and_tracks_mathai() {
        let pdf = gaussian_grid(1.0);
        let shannon = continuous_entropy(ContinuousKind::Shannon, 1.0, &pdf).unwrap();
        assert_eq!(mathai_expansion(&pdf, 0.0).unwrap(), shannon);
        for eps in [0.05, -0.05, 0.1, -0.1] {
            let exact = continuous_entropy(ContinuousKind::Mathai, 1.0 + eps, &pdf).unwrap();
            let approx = mathai_expansion(&pdf, eps).unwrap();
            // leading remainder is (ε²/6) |∫p (ln p)³| ≈ 0.64 ε² for this density
            assert!((exact - approx).abs() <= eps * eps, "ε={eps}: {exact} vs {approx}");
        }
        assert!(mathai_expansion(&pdf, 0.25).is_err());
    }
}
