//! Relaxation laws: exponential decay, its fractional (Mittag-Leffler)
//! generalization, and a gamma mixture over the rate constant whose
//! unconditional density has a power-law tail.
//!
//! With `γ+1 = 1/(α−1)` and `ω^{−ν} = b(α−1)`,
//!
//! ```text
//! ∫₀^∞ N₀ t^{μ−1} E^{γ+1}_{ν,μ}(−(ct)^ν) · ω^μ c^{μ−1} e^{−ωc}/Γ(μ) dc
//!     = N₀/Γ(μ) · t^{μ−1} [1 + b(α−1) t^ν]^{−1/(α−1)}.
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, param, Result};
use crate::quadrature::integrate_half_line;
use crate::special::{log_gamma, mittag_leffler, prabhakar, Z_MAX};

/// Series tolerance for Mittag-Leffler evaluations.
pub const SERIES_TOL: f64 = 1e-14;
/// Quadrature tolerance of the mixture integral.
pub const MIXTURE_QUAD_TOL: f64 = 1e-11;
/// Pass threshold for the mixture identity.
pub const MIXTURE_GATE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KineticsParams {
    pub n0: f64,
    pub c: f64,
    pub nu: f64,
    pub mu: f64,
    pub b: f64,
    pub alpha_k: f64,
}

impl KineticsParams {
    pub fn new(n0: f64, c: f64, nu: f64, mu: f64, b: f64, alpha_k: f64) -> Result<Self> {
        let p = Self {
            n0,
            c,
            nu,
            mu,
            b,
            alpha_k,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        for (name, v) in [("N₀", self.n0), ("c", self.c), ("μ", self.mu), ("b", self.b)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(param(format!("{name} must be positive, got {v}")));
            }
        }
        if !(self.nu > 0.0 && self.nu <= 1.0) {
            return Err(param(format!("ν must lie in (0, 1], got {}", self.nu)));
        }
        if !(self.alpha_k > 1.0) || !self.alpha_k.is_finite() {
            return Err(param(format!("α must exceed 1, got {}", self.alpha_k)));
        }
        Ok(())
    }

    /// `γ = (2−α)/(α−1)`, so that `γ + 1 = 1/(α−1)`.
    pub fn gamma_k(&self) -> f64 {
        (2.0 - self.alpha_k) / (self.alpha_k - 1.0)
    }

    /// `ω = (b(α−1))^{−1/ν}`.
    pub fn omega(&self) -> f64 {
        (self.b * (self.alpha_k - 1.0)).powf(-1.0 / self.nu)
    }
}

fn check_time(t: f64, strict: bool) -> Result<()> {
    let ok = if strict { t > 0.0 } else { t >= 0.0 };
    if !ok || !t.is_finite() {
        return Err(domain(format!(
            "time must be {}, got {t}",
            if strict { "positive" } else { "non-negative" }
        )));
    }
    Ok(())
}

/// `N₀ e^{−ct}`.
pub fn exponential_decay(n0: f64, c: f64, t: f64) -> Result<f64> {
    check_time(t, false)?;
    Ok(n0 * (-c * t).exp())
}

/// `N₀ E_ν(−(ct)^ν)`.
pub fn ml_decay(n0: f64, c: f64, nu: f64, t: f64) -> Result<f64> {
    check_time(t, false)?;
    if !(nu > 0.0 && nu <= 1.0) {
        return Err(param(format!("ν must lie in (0, 1], got {nu}")));
    }
    Ok(n0 * mittag_leffler(nu, 1.0, -(c * t).powf(nu), SERIES_TOL)?)
}

/// Second index of the Prabhakar function in the conditional density.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SecondIndex {
    /// `E^{γ+1}_{ν,μ}`: satisfies the mixture identity.
    #[default]
    Mu,
    /// `E^{γ+1}_{ν,ν}`.
    Nu,
}

/// `N(t|c) = N₀ t^{μ−1} E^{γ+1}_{ν,μ}(−(ct)^ν)`.
pub fn conditional_density(params: &KineticsParams, c_rate: f64, t: f64) -> Result<f64> {
    conditional_density_with(params, c_rate, t, SecondIndex::Mu)
}

pub fn conditional_density_with(params: &KineticsParams, c_rate: f64, t: f64, index: SecondIndex) -> Result<f64> {
    params.validate()?;
    check_time(t, true)?;
    if !(c_rate >= 0.0) || !c_rate.is_finite() {
        return Err(param(format!("rate must be non-negative, got {c_rate}")));
    }
    let second = match index {
        SecondIndex::Mu => params.mu,
        SecondIndex::Nu => params.nu,
    };
    let e = prabhakar(
        params.gamma_k() + 1.0,
        params.nu,
        second,
        -(c_rate * t).powf(params.nu),
        SERIES_TOL,
    )?;
    Ok(params.n0 * t.powf(params.mu - 1.0) * e)
}

/// Gamma density `ω^μ c^{μ−1} e^{−ωc} / Γ(μ)`.
pub fn gamma_rate_density(omega: f64, mu: f64, c_rate: f64) -> Result<f64> {
    if !(omega > 0.0) || !(mu > 0.0) {
        return Err(param(format!("ω and μ must be positive, got ω = {omega}, μ = {mu}")));
    }
    if !(c_rate > 0.0) || !c_rate.is_finite() {
        return Err(domain(format!("rate must be positive, got {c_rate}")));
    }
    Ok((mu * omega.ln() + (mu - 1.0) * c_rate.ln() - omega * c_rate - log_gamma(mu)?).exp())
}

/// `N₀/Γ(μ) · t^{μ−1} [1 + b(α−1) t^ν]^{−1/(α−1)}`.
pub fn unconditional_density(params: &KineticsParams, t: f64) -> Result<f64> {
    params.validate()?;
    check_time(t, true)?;
    let am1 = params.alpha_k - 1.0;
    let ln = params.n0.ln() - log_gamma(params.mu)? + (params.mu - 1.0) * t.ln()
        - (params.b * am1 * t.powf(params.nu)).ln_1p() / am1;
    Ok(ln.exp())
}

/// The `α → 1⁺` limit of [`unconditional_density`]:
/// `N₀/Γ(μ) · t^{μ−1} e^{−b t^ν}`.
pub fn stretched_exponential(params: &KineticsParams, t: f64) -> Result<f64> {
    params.validate()?;
    check_time(t, true)?;
    let ln = params.n0.ln() - log_gamma(params.mu)? + (params.mu - 1.0) * t.ln() - params.b * t.powf(params.nu);
    Ok(ln.exp())
}

/// `∫ N(t|c) g(c) dc` by quadrature on `c = u/(1−u)`. Rates with
/// `(ct)^ν > Z_MAX` lie beyond the Mittag-Leffler evaluation window and are
/// dropped; the gamma weight there is below `e^{−ω Z_MAX^{1/ν}/t}`.
pub fn mixture_integral(params: &KineticsParams, t: f64, index: SecondIndex) -> Result<f64> {
    params.validate()?;
    check_time(t, true)?;
    let omega = params.omega();
    let c_max = Z_MAX.powf(1.0 / params.nu) / t;
    let r = integrate_half_line(
        |c| {
            if c <= 0.0 || c > c_max {
                return 0.0;
            }
            let g = match gamma_rate_density(omega, params.mu, c) {
                Ok(g) => g,
                Err(_) => return f64::NAN,
            };
            if g == 0.0 {
                return 0.0;
            }
            conditional_density_with(params, c, t, index).map_or(f64::NAN, |n| n * g)
        },
        MIXTURE_QUAD_TOL,
    )?;
    Ok(r.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixturePoint {
    pub params: KineticsParams,
    pub t: f64,
    pub mixture: f64,
    pub closed: f64,
}

impl MixturePoint {
    pub fn deviation(&self) -> f64 {
        (self.mixture - self.closed).abs()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixtureReport {
    pub points: Vec<MixturePoint>,
    pub max_deviation: f64,
    pub pass: bool,
}

/// Default mixture grid: `t ∈ {0.25, 0.5, 1, 2}`, `μ ∈ {1, 2}`,
/// `ν ∈ {0.5, 1}`, `α ∈ {1.5, 2}`, with `N₀ = b = c = 1`.
pub fn default_mixture_grid() -> Vec<(KineticsParams, f64)> {
    let mut out = Vec::new();
    for mu in [1.0, 2.0] {
        for nu in [0.5, 1.0] {
            for alpha in [1.5, 2.0] {
                for t in [0.25, 0.5, 1.0, 2.0] {
                    out.push((
                        KineticsParams {
                            n0: 1.0,
                            c: 1.0,
                            nu,
                            mu,
                            b: 1.0,
                            alpha_k: alpha,
                        },
                        t,
                    ));
                }
            }
        }
    }
    out
}

/// Evaluates the mixture identity on `grid`; passes when every absolute
/// deviation is at most [`MIXTURE_GATE`].
pub fn mixture_check(grid: &[(KineticsParams, f64)], index: SecondIndex) -> Result<MixtureReport> {
    let points = grid
        .par_iter()
        .map(|&(params, t)| {
            Ok(MixturePoint {
                params,
                t,
                mixture: mixture_integral(&params, t, index)?,
                closed: unconditional_density(&params, t)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_deviation = points.iter().map(MixturePoint::deviation).fold(0.0, f64::max);
    Ok(MixtureReport {
        pass: max_deviation <= MIXTURE_GATE,
        points,
        max_deviation,
    })
}

/// Asymptotic exponent `μ − 1 − ν/(α−1)` of the unconditional density.
pub fn tail_exponent(params: &KineticsParams) -> f64 {
    params.mu - 1.0 - params.nu / (params.alpha_k - 1.0)
}

/// Least-squares slope of `ln N` against `ln t` on 20 geometric points of
/// `[t1, t2]`.
pub fn log_log_slope(params: &KineticsParams, t1: f64, t2: f64) -> Result<f64> {
    if !(t1 > 0.0 && t2 > t1) {
        return Err(param(format!("need 0 < t1 < t2, got [{t1}, {t2}]")));
    }
    let pts = (0..20)
        .map(|k| {
            let t = t1 * (t2 / t1).powf(k as f64 / 19.0);
            Ok((t.ln(), unconditional_density(params, t)?.ln()))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_half_line;

    fn params(mu: f64, nu: f64, alpha: f64) -> KineticsParams {
        KineticsParams::new(1.0, 1.0, nu, mu, 1.0, alpha).unwrap()
    }

    #[test]
    fn derived_constants() {
        let p = params(1.0, 0.5, 1.5);
        assert!((p.gamma_k() + 1.0 - 2.0).abs() < 1e-15);
        assert!((p.omega() - 4.0).abs() < 1e-14);
        assert!(KineticsParams::new(1.0, 1.0, 1.5, 1.0, 1.0, 2.0).is_err());
        assert!(KineticsParams::new(1.0, 1.0, 0.5, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn exponential_values() {
        assert_eq!(exponential_decay(1.0, 1.0, 0.0).unwrap(), 1.0);
        assert!((exponential_decay(1.0, 1.0, 1.0).unwrap() - (-1f64).exp()).abs() < 1e-16);
        assert!((exponential_decay(3.0, 0.7, std::f64::consts::LN_2 / 0.7).unwrap() - 1.5).abs() < 1e-15);
        assert!(exponential_decay(1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn ml_decay_values() {
        for i in 0..=100 {
            let t = i as f64 * 0.1;
            let a = ml_decay(2.0, 1.3, 1.0, t).unwrap();
            let b = exponential_decay(2.0, 1.3, t).unwrap();
            assert!((a - b).abs() <= 1e-10 * b.max(1e-300).max(1.0), "t = {t}");
        }
        assert_eq!(ml_decay(2.0, 1.0, 0.5, 0.0).unwrap(), 2.0);
        assert!((ml_decay(1.0, 1.0, 0.5, 1.0).unwrap() - 0.427_583_576_155_807_004_41).abs() < 1e-13);
    }

    #[test]
    fn conditional_density_reductions() {
        // γ + 1 = 1, μ = 1
        let p = params(1.0, 0.6, 2.0);
        let a = conditional_density(&p, 1.4, 0.9).unwrap();
        let b = ml_decay(1.0, 1.4, 0.6, 0.9).unwrap();
        assert!((a - b).abs() < 1e-13);
        // γ + 1 = 3, ν = μ = 1: confluent ₁F₁(3; 1; −0.7)
        let p = params(1.0, 1.0, 1.0 + 1.0 / 3.0);
        let v = conditional_density(&p, 0.7, 1.0).unwrap();
        assert!((v + 0.076_970_722_087_668_449_529).abs() < 1e-13);
        let p = params(2.5, 0.5, 1.5);
        assert!(conditional_density(&p, 1.0, 1e-12).unwrap() < 1e-17);
    }

    #[test]
    fn gamma_density() {
        for c in [0.1, 1.0, 3.0] {
            assert!((gamma_rate_density(1.0, 1.0, c).unwrap() - (-c).exp()).abs() < 1e-15);
        }
        let mass = integrate_half_line(
            |c| {
                if c > 0.0 {
                    gamma_rate_density(2.5, 3.2, c).unwrap()
                } else {
                    0.0
                }
            },
            1e-12,
        )
        .unwrap()
        .value;
        assert!((mass - 1.0).abs() < 1e-8);
        let mode = (3.2 - 1.0) / 2.5;
        let at = gamma_rate_density(2.5, 3.2, mode).unwrap();
        assert!(at > gamma_rate_density(2.5, 3.2, mode * 1.01).unwrap());
        assert!(at > gamma_rate_density(2.5, 3.2, mode * 0.99).unwrap());
    }

    #[test]
    fn unconditional_values() {
        let p = params(1.0, 1.0, 2.0);
        assert!((unconditional_density(&p, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((unconditional_density(&p, 1e-12).unwrap() - 1.0).abs() < 1e-11);
        let p = KineticsParams::new(1.5, 1.0, 0.7, 2.0, 1.2, 1.0 + 1e-4).unwrap();
        for t in [0.5, 1.0, 2.0, 4.0] {
            let a = unconditional_density(&p, t).unwrap();
            let b = stretched_exponential(&p, t).unwrap();
            assert!((a - b).abs() <= 1e-3 * b, "t = {t}");
        }
    }

    #[test]
    fn literal_index_breaks_the_mixture() {
        let p = params(2.0, 0.5, 1.5);
        let right = mixture_integral(&p, 1.0, SecondIndex::Mu).unwrap();
        let wrong = mixture_integral(&p, 1.0, SecondIndex::Nu).unwrap();
        let closed = unconditional_density(&p, 1.0).unwrap();
        assert!((right - closed).abs() < MIXTURE_GATE);
        assert!((wrong - closed).abs() > 1e-2);
    }

    #[test]
    fn power_law_tail() {
        let p = params(1.0, 1.0, 2.0);
        let slope = log_log_slope(&p, 100.0, 1000.0).unwrap();
        let expected = tail_exponent(&p);
        assert!(
            (slope - expected).abs() <= 0.02 * expected.abs(),
            "{slope} vs {expected}"
        );
    }

    #[test]
    fn ml_decay_is_monotone() {
        for nu in [0.25, 0.5, 0.75, 1.0] {
            let tmax = 25f64.powf(1.0 / nu).min(40.0);
            let mut prev = f64::INFINITY;
            for i in 0..=400 {
                let v = ml_decay(1.0, 1.0, nu, tmax * i as f64 / 400.0).unwrap();
                assert!(v >= 0.0 && v <= prev + 1e-15, "ν = {nu}, step {i}");
                prev = v;
            }
        }
    }
}
