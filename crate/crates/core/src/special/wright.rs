//! The generalized Wright function
//!
//! ```text
//! pΨq[(a_i, α_i); (b_j, β_j) | z] = Σ_k  Π Γ(a_i + α_i k) / Π Γ(b_j + β_j k) · z^k / k!
//! ```
//!
//! restricted to real parameters whose gamma arguments stay positive along the
//! whole series. Terms are formed in log space, so huge prefactors (for
//! example `Γ(1 + η/(1-α))` as α → 1) can be folded into the sum without
//! overflow through [`WrightSeriesSpec::eval_scaled`].

use crate::error::{domain, param, Result};
use crate::special::gamma::ln_gamma_pos;
use crate::special::series::{check_conditioning, check_tol, sum_series};

/// Parameter lists `(a_i, α_i)` and `(b_j, β_j)` of a `pΨq` series.
#[derive(Debug, Clone, PartialEq)]
pub struct WrightSeriesSpec {
    upper: Vec<(f64, f64)>,
    lower: Vec<(f64, f64)>,
    radius: Option<f64>,
}

impl WrightSeriesSpec {
    /// Builds an entire series: requires `Σβ_j − Σα_i > −1`, all scales
    /// positive and all gamma arguments `a_i`, `b_j` positive.
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Result<Self> {
        check_pairs(&upper, &lower)?;
        let excess = excess(&upper, &lower);
        if !(excess > -1.0) {
            return Err(param(format!("Wright series needs Σβ − Σα > −1, got {excess}")));
        }
        Ok(Self {
            upper,
            lower,
            radius: None,
        })
    }

    /// Builds a series on the convergence boundary `Σβ_j − Σα_i = −1`, which
    /// converges only inside the disc `|z| < Πβ_j^β_j / Πα_i^α_i`.
    pub fn with_finite_radius(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Result<Self> {
        check_pairs(&upper, &lower)?;
        let excess = excess(&upper, &lower);
        if (excess + 1.0).abs() > 1e-12 {
            return Err(param(format!(
                "finite-radius Wright series needs Σβ − Σα = −1, got {excess}"
            )));
        }
        let ln_radius: f64 =
            lower.iter().map(|&(_, b)| b * b.ln()).sum::<f64>() - upper.iter().map(|&(_, a)| a * a.ln()).sum::<f64>();
        Ok(Self {
            upper,
            lower,
            radius: Some(ln_radius.exp()),
        })
    }

    pub fn upper(&self) -> &[(f64, f64)] {
        &self.upper
    }

    pub fn lower(&self) -> &[(f64, f64)] {
        &self.lower
    }

    /// Radius of convergence; `None` for an entire series.
    pub fn radius(&self) -> Option<f64> {
        self.radius
    }

    /// `ln |term_k|` without the `z^k` factor.
    fn ln_coefficient(&self, k: usize) -> f64 {
        let kf = k as f64;
        let up: f64 = self.upper.iter().map(|&(a, al)| ln_gamma_pos(a + al * kf)).sum();
        let down: f64 = self.lower.iter().map(|&(b, be)| ln_gamma_pos(b + be * kf)).sum();
        up - down - ln_gamma_pos(kf + 1.0)
    }

    /// `exp(ln_scale) · pΨq(z)`, summed term by term in log space.
    pub fn eval_scaled(&self, z: f64, ln_scale: f64, tol: f64) -> Result<f64> {
        check_tol(tol)?;
        if !z.is_finite() {
            return Err(domain(format!("Wright argument must be finite, got {z}")));
        }
        if let Some(r) = self.radius {
            // geometric rate (|z|/r)^k must reach tol well before the term cap
            if z.abs() >= 0.95 * r {
                return Err(domain(format!(
                    "|z| = {} lies outside 0.95 × radius of convergence {r}",
                    z.abs()
                )));
            }
        }
        if z == 0.0 {
            return Ok((ln_scale + self.ln_coefficient(0)).exp());
        }
        let ln_z = z.abs().ln();
        let negative = z < 0.0;
        let sum = sum_series(
            |k| {
                let mag = (ln_scale + self.ln_coefficient(k) + k as f64 * ln_z).exp();
                if negative && k % 2 == 1 {
                    -mag
                } else {
                    mag
                }
            },
            tol,
        )?;
        check_conditioning(&sum)
    }
}

fn check_pairs(upper: &[(f64, f64)], lower: &[(f64, f64)]) -> Result<()> {
    for &(a, al) in upper {
        if !(al > 0.0) || !(a > 0.0) || !a.is_finite() || !al.is_finite() {
            return Err(param(format!("upper pair ({a}, {al}) needs a > 0 and α > 0")));
        }
    }
    for &(b, be) in lower {
        if !(be > 0.0) || !(b > 0.0) || !b.is_finite() || !be.is_finite() {
            return Err(param(format!("lower pair ({b}, {be}) needs b > 0 and β > 0")));
        }
    }
    Ok(())
}

fn excess(upper: &[(f64, f64)], lower: &[(f64, f64)]) -> f64 {
    lower.iter().map(|p| p.1).sum::<f64>() - upper.iter().map(|p| p.1).sum::<f64>()
}

/// Evaluates `pΨq(z)` for a validated spec.
pub fn wright_eval(spec: &WrightSeriesSpec, z: f64, tol: f64) -> Result<f64> {
    spec.eval_scaled(z, 0.0, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma::log_gamma;
    use std::f64::consts::PI;

    #[test]
    fn zero_argument_keeps_only_first_term() {
        let (rho, z0) = (1.3, 0.7);
        let spec = WrightSeriesSpec::new(vec![(rho, 2.0)], vec![(0.5, 1.0), (z0 + rho + 1.0, 2.0)]).unwrap();
        let got = wright_eval(&spec, 0.0, 1e-15).unwrap();
        let want = (log_gamma(rho).unwrap() - log_gamma(0.5).unwrap() - log_gamma(z0 + rho + 1.0).unwrap()).exp();
        assert!((got - want).abs() < 1e-15 * want);
    }

    #[test]
    fn gamma_cancelling_spec_is_the_exponential() {
        let spec = WrightSeriesSpec::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)]).unwrap();
        assert!((wright_eval(&spec, 1.0, 1e-16).unwrap() - std::f64::consts::E).abs() < 1e-14);
    }

    #[test]
    fn sine_chain() {
        // √π · ₁Ψ₂[(1,2);(1/2,1),(2,2) | −1/4] = sin 1; reference from 200-term mpmath sum.
        let spec = WrightSeriesSpec::new(vec![(1.0, 2.0)], vec![(0.5, 1.0), (2.0, 2.0)]).unwrap();
        let got = wright_eval(&spec, -0.25, 1e-16).unwrap();
        assert!((got - 0.474_749_164_486_287_487_41).abs() < 4e-15);
        assert!((PI.sqrt() * got - 1f64.sin()).abs() < 4e-15);
    }

    #[test]
    fn rejects_divergent_and_bad_parameters() {
        assert!(WrightSeriesSpec::new(vec![(1.0, 2.0)], vec![(1.0, 0.5)]).is_err());
        assert!(WrightSeriesSpec::new(vec![(-0.5, 1.0)], vec![(1.0, 1.0)]).is_err());
        assert!(WrightSeriesSpec::new(vec![(1.0, 1.0)], vec![(0.0, 1.0)]).is_err());
        assert!(WrightSeriesSpec::new(vec![(1.0, 0.0)], vec![(1.0, 1.0)]).is_err());
        // boundary case is only accepted by the finite-radius constructor
        assert!(WrightSeriesSpec::new(vec![(1.0, 2.0)], vec![(0.5, 1.0)]).is_err());
    }

    #[test]
    fn finite_radius_series() {
        // ₁Ψ₁[(1,2);(1/2,1)|w] has radius 1/4; Γ(1+2k)/(Γ(1/2+k) k!) = 4^k/√π,
        // so the sum is 1/(√π (1 − 4w)).
        let spec = WrightSeriesSpec::with_finite_radius(vec![(1.0, 2.0)], vec![(0.5, 1.0)]).unwrap();
        assert!((spec.radius().unwrap() - 0.25).abs() < 1e-15);
        let w = -0.1;
        let got = wright_eval(&spec, w, 1e-15).unwrap();
        let want = 1.0 / (PI.sqrt() * (1.0 - 4.0 * w));
        assert!((got - want).abs() < 1e-13);
        assert!(wright_eval(&spec, 0.3, 1e-12).is_err());
    }

    #[test]
    fn scaled_evaluation_survives_underflowing_series() {
        // Γ(1+k)/Γ(1001+k) underflows term by term; folding in lnΓ(1001) keeps
        // the sum Σ z^k / (1001)_k representable.
        let spec = WrightSeriesSpec::new(vec![(1.0, 1.0)], vec![(1001.0, 1.0)]).unwrap();
        let got = spec.eval_scaled(1.0, log_gamma(1001.0).unwrap(), 1e-16).unwrap();
        let mut want = 0.0;
        let mut term = 1.0;
        for k in 0..20 {
            want += term;
            term /= 1001.0 + k as f64;
        }
        assert!((got - want).abs() < 1e-11);
    }
}
