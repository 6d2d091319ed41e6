use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use super::{check_x, ImageForm, OperatorImage, PathwayParams, SERIES_TOL};
use crate::error::{domain, param, Result};
use crate::special::{gamma, ln_gamma_pos, log_gamma, mittag_leffler, BesselParams, WrightSeriesSpec};

const LN_SQRT_PI: f64 = 0.572_364_942_924_700_087_07;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrigKind {
    Cos,
    Cosh,
    Sin,
    Sinh,
}

impl TrigKind {
    pub const ALL: [TrigKind; 4] = [TrigKind::Cos, TrigKind::Cosh, TrigKind::Sin, TrigKind::Sinh];

    pub fn apply(&self, v: f64) -> f64 {
        match self {
            TrigKind::Cos => v.cos(),
            TrigKind::Cosh => v.cosh(),
            TrigKind::Sin => v.sin(),
            TrigKind::Sinh => v.sinh(),
        }
    }

    fn is_even(&self) -> bool {
        matches!(self, TrigKind::Cos | TrigKind::Cosh)
    }

    /// Sign of the series argument: `−` for circular, `+` for hyperbolic.
    fn sign(&self) -> f64 {
        match self {
            TrigKind::Cos | TrigKind::Sin => -1.0,
            TrigKind::Cosh | TrigKind::Sinh => 1.0,
        }
    }
}

fn check_rho(rho: f64) -> Result<()> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(param(format!("ρ must be positive, got {rho}")));
    }
    Ok(())
}

/// `P t^{ρ−1} = Γ(ρ)Γ(1+z)/Γ(z+ρ+1) · x^{η+ρ}/[a(1−α)]^ρ`.
pub fn pathway_power(params: &PathwayParams, rho: f64, x: f64) -> Result<f64> {
    let params = params.validated()?;
    check_rho(rho)?;
    check_x(x)?;
    let z = params.z_exp();
    if z + rho + 1.0 < 170.0 {
        let ratio = gamma(rho)? * gamma(1.0 + z)? / gamma(z + rho + 1.0)?;
        let v = ratio * x.powf(params.eta + rho) / params.scale().powf(rho);
        if v.is_finite() && v > 0.0 {
            return Ok(v);
        }
    }
    let ln = log_gamma(rho)? + ln_gamma_pos(1.0 + z) - ln_gamma_pos(z + rho + 1.0) + (params.eta + rho) * x.ln()
        - rho * params.scale().ln();
    Ok(ln.exp())
}

/// Image of `t^{ρ−1} W_{p,b,c}(t)`:
///
/// ```text
/// x^{p+ρ+η} Γ(1+z) / (2^p [a(1−α)]^{p+ρ}) · ₁Ψ₂[(p+ρ,2); (κ,1),(z+p+ρ+1,2) | −c x²/(4[a(1−α)]²)]
/// ```
pub fn pathway_bessel(params: &PathwayParams, rho: f64, bp: &BesselParams, x: f64, tol: f64) -> Result<OperatorImage> {
    let params = params.validated()?;
    let bp = BesselParams::new(bp.p, bp.b, bp.c)?;
    check_x(x)?;
    let pr = bp.p + rho;
    if !(pr > 0.0) {
        return Err(param(format!("ρ + p must be positive, got {pr}")));
    }
    let z = params.z_exp();
    let s = params.scale();
    let spec = WrightSeriesSpec::new(vec![(pr, 2.0)], vec![(bp.kappa(), 1.0), (z + pr + 1.0, 2.0)])?;
    let ln_scale = (pr + params.eta) * x.ln() + ln_gamma_pos(1.0 + z) - bp.p * LN_2 - pr * s.ln();
    let value = spec.eval_scaled(-bp.c * x * x / (4.0 * s * s), ln_scale, tol)?;
    Ok(OperatorImage {
        value,
        form: ImageForm::ClosedWright,
    })
}

/// Image of `t^{ρ−1} g(ct)` for `g` one of cos, cosh, sin, sinh.
///
/// ```text
/// cos:  √π x^{ρ+η} Γ(1+z)/[a(1−α)]^ρ · ₁Ψ₂[(ρ,2); (1/2,1),(z+ρ+1,2) | ∓c²x²/(4[a(1−α)]²)]
/// sin:  c (√π/2) x^{ρ+η+1} Γ(1+z)/[a(1−α)]^{ρ+1} · ₁Ψ₂[(ρ+1,2); (3/2,1),(z+ρ+2,2) | ∓c²x²/(4[a(1−α)]²)]
/// ```
pub fn pathway_trig(
    kind: TrigKind,
    params: &PathwayParams,
    rho: f64,
    c: f64,
    x: f64,
    tol: f64,
) -> Result<OperatorImage> {
    let params = params.validated()?;
    check_rho(rho)?;
    check_x(x)?;
    if !c.is_finite() {
        return Err(param(format!("frequency must be finite, got {c}")));
    }
    let z = params.z_exp();
    let s = params.scale();
    let arg = kind.sign() * c * c * x * x / (4.0 * s * s);
    let lead = ln_gamma_pos(1.0 + z) + params.eta * x.ln();
    let value = if kind.is_even() {
        let spec = WrightSeriesSpec::new(vec![(rho, 2.0)], vec![(0.5, 1.0), (z + rho + 1.0, 2.0)])?;
        spec.eval_scaled(arg, lead + LN_SQRT_PI + rho * (x / s).ln(), tol)?
    } else {
        let spec = WrightSeriesSpec::new(vec![(rho + 1.0, 2.0)], vec![(1.5, 1.0), (z + rho + 2.0, 2.0)])?;
        c * spec.eval_scaled(arg, lead + LN_SQRT_PI - LN_2 + (rho + 1.0) * (x / s).ln(), tol)?
    };
    Ok(OperatorImage {
        value,
        form: ImageForm::ClosedWright,
    })
}

/// Integrand whose image [`laplace_limit`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum LimitKind {
    Power,
    Bessel { params: BesselParams },
    Trig { trig: TrigKind, c: f64 },
}

/// The `α → 1⁻` limit of the operator images, `x^η L[t^{ρ−1} g](aη/x)`.
///
/// Bessel and trigonometric kinds use the `₁Ψ₁` series, which converges for
/// `|c| x < aη` (Bessel: `|c| x² < (aη)²`). Outside that disc cos and sin
/// fall back to the elementary transform; the hyperbolic transforms diverge
/// there.
pub fn laplace_limit(kind: LimitKind, a: f64, eta: f64, rho: f64, x: f64, tol: f64) -> Result<OperatorImage> {
    PathwayParams::new(eta, 0.0, a)?;
    check_x(x)?;
    let ae = a * eta;
    let image = |value| OperatorImage {
        value,
        form: ImageForm::LaplaceLimit,
    };
    match kind {
        LimitKind::Power => {
            check_rho(rho)?;
            Ok(image((log_gamma(rho)? + (eta + rho) * x.ln() - rho * ae.ln()).exp()))
        }
        LimitKind::Bessel { params: bp } => {
            let bp = BesselParams::new(bp.p, bp.b, bp.c)?;
            let pr = bp.p + rho;
            if !(pr > 0.0) {
                return Err(param(format!("ρ + p must be positive, got {pr}")));
            }
            let spec = WrightSeriesSpec::with_finite_radius(vec![(pr, 2.0)], vec![(bp.kappa(), 1.0)])?;
            let ln_scale = (pr + eta) * x.ln() - bp.p * LN_2 - pr * ae.ln();
            Ok(image(spec.eval_scaled(
                -bp.c * x * x / (4.0 * ae * ae),
                ln_scale,
                tol,
            )?))
        }
        LimitKind::Trig { trig, c } => {
            check_rho(rho)?;
            let arg = trig.sign() * c * c * x * x / (4.0 * ae * ae);
            let series = if trig.is_even() {
                WrightSeriesSpec::with_finite_radius(vec![(rho, 2.0)], vec![(0.5, 1.0)])?.eval_scaled(
                    arg,
                    LN_SQRT_PI + eta * x.ln() + rho * (x / ae).ln(),
                    tol,
                )
            } else {
                WrightSeriesSpec::with_finite_radius(vec![(rho + 1.0, 2.0)], vec![(1.5, 1.0)])?
                    .eval_scaled(arg, LN_SQRT_PI - LN_2 + eta * x.ln() + (rho + 1.0) * (x / ae).ln(), tol)
                    .map(|v| c * v)
            };
            match series {
                Ok(v) => Ok(image(v)),
                Err(crate::Error::Domain(_)) if matches!(trig, TrigKind::Cos | TrigKind::Sin) => {
                    Ok(image(x.powf(eta) * laplace_transform_closed(trig, rho, c, ae / x)?))
                }
                Err(e) => Err(e),
            }
        }
    }
}

/// Elementary Laplace transform `∫₀^∞ e^{−st} t^{ρ−1} g(ct) dt`.
pub fn laplace_transform_closed(kind: TrigKind, rho: f64, c: f64, s: f64) -> Result<f64> {
    check_rho(rho)?;
    if !(s > 0.0) || !s.is_finite() {
        return Err(domain(format!("transform variable must be positive, got {s}")));
    }
    let g = log_gamma(rho)?.exp();
    match kind {
        TrigKind::Cos | TrigKind::Sin => {
            let r = (s * s + c * c).powf(-0.5 * rho);
            let theta = rho * (c / s).atan();
            Ok(g * r
                * if kind == TrigKind::Cos {
                    theta.cos()
                } else {
                    theta.sin()
                })
        }
        TrigKind::Cosh | TrigKind::Sinh => {
            if !(s > c.abs()) {
                return Err(domain(format!(
                    "hyperbolic transform needs s > |c|, got s = {s}, c = {c}"
                )));
            }
            let (lo, hi) = ((s - c).powf(-rho), (s + c).powf(-rho));
            Ok(0.5 * g * if kind == TrigKind::Cosh { lo + hi } else { lo - hi })
        }
    }
}

/// Riemann–Liouville integral of cosine: `(I^η cos)(x) = x^η E_{2,1+η}(−x²)`.
pub fn rl_cos(eta: f64, x: f64) -> Result<f64> {
    if !(eta > 0.0) || !eta.is_finite() {
        return Err(param(format!("order must be positive, got {eta}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("argument must be non-negative, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(x.powf(eta) * mittag_leffler(2.0, 1.0 + eta, -x * x, SERIES_TOL)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathway::{pathway_integral_numeric, rl_integral_numeric, QUAD_TOL};
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn power_images() {
        let p = PathwayParams::new(1.0, 0.0, 1.0).unwrap();
        assert!(close(pathway_power(&p, 1.0, 1.0).unwrap(), 0.5, 1e-14));
        assert!(close(pathway_power(&p, 2.0, 1.0).unwrap(), 1.0 / 6.0, 1e-14));
        let p = PathwayParams::new(2.0, 1.0 - 1e-6, 1.5).unwrap();
        let lim = gamma(1.5).unwrap() * 1.2f64.powf(3.5) / 3.0f64.powf(1.5);
        assert!(close(pathway_power(&p, 1.5, 1.2).unwrap(), lim, 1e-5));
    }

    #[test]
    fn zero_frequency_cosine_is_power() {
        let p = PathwayParams::new(1.5, 0.3, 2.0).unwrap();
        let cos = pathway_trig(TrigKind::Cos, &p, 1.25, 0.0, 0.8, SERIES_TOL).unwrap();
        let pow = pathway_power(&p, 1.25, 0.8).unwrap();
        assert!(close(cos.value, pow, 1e-14));
        assert_eq!(
            pathway_trig(TrigKind::Sin, &p, 1.25, 0.0, 0.8, SERIES_TOL)
                .unwrap()
                .value,
            0.0
        );
    }

    #[test]
    fn zero_weight_bessel_is_scaled_power() {
        let p = PathwayParams::new(2.0, 0.5, 1.0).unwrap();
        let bp = BesselParams::new(0.5, 1.0, 0.0).unwrap();
        let img = pathway_bessel(&p, 1.5, &bp, 1.0, SERIES_TOL).unwrap();
        let expected = pathway_power(&p, 2.0, 1.0).unwrap() * 2f64.powf(-0.5) / gamma(bp.kappa()).unwrap();
        assert!(close(img.value, expected, 1e-14));
    }

    #[test]
    fn small_frequency_sinh() {
        let p = PathwayParams::new(1.0, 0.3, 1.0).unwrap();
        let c = 1e-3;
        let img = pathway_trig(TrigKind::Sinh, &p, 1.5, c, 1.0, SERIES_TOL).unwrap().value;
        let lead = c * pathway_power(&p, 2.5, 1.0).unwrap();
        assert!((img - lead).abs() < 10.0 * c.powi(3));
    }

    #[test]
    fn half_order_bessel_against_quadrature() {
        let p = PathwayParams::new(2.0, 0.5, 1.0).unwrap();
        let bp = BesselParams::new(0.5, 1.0, 1.0).unwrap();
        let closed = pathway_bessel(&p, 1.5, &bp, 1.0, SERIES_TOL).unwrap().value;
        // t^{ρ−1} J_{1/2}(t) = t^{1/2} √(2/(πt)) sin t
        let numeric =
            pathway_integral_numeric(|t| (2.0 / std::f64::consts::PI).sqrt() * t.sin(), &p, 1.0, QUAD_TOL).unwrap();
        assert!((closed - numeric).abs() < 1e-9);
    }

    #[test]
    fn limit_forms() {
        let v = laplace_limit(LimitKind::Power, 1.0, 2.0, 1.0, 1.0, SERIES_TOL).unwrap();
        assert!(close(v.value, 0.5, 1e-15));
        for trig in TrigKind::ALL {
            let lim = laplace_limit(LimitKind::Trig { trig, c: 1.0 }, 1.0, 2.0, 1.5, 1.0, SERIES_TOL).unwrap();
            let direct = laplace_transform_closed(trig, 1.5, 1.0, 2.0).unwrap();
            assert!(close(lim.value, direct, 1e-12), "{trig:?}: {} vs {direct}", lim.value);
        }
        // outside the disc only the circular transforms exist
        let far = LimitKind::Trig {
            trig: TrigKind::Cos,
            c: 3.0,
        };
        let v = laplace_limit(far, 1.0, 2.0, 1.5, 1.0, SERIES_TOL).unwrap();
        assert!(close(
            v.value,
            laplace_transform_closed(TrigKind::Cos, 1.5, 3.0, 2.0).unwrap(),
            1e-15
        ));
        let far = LimitKind::Trig {
            trig: TrigKind::Cosh,
            c: 3.0,
        };
        assert!(laplace_limit(far, 1.0, 2.0, 1.5, 1.0, SERIES_TOL).is_err());
    }

    #[test]
    fn bessel_limit_matches_cosine_limit() {
        // t^{ρ−1} cos t = √(π/2) t^{ρ−1/2} W_{−1/2,1,1}(t)
        let bp = BesselParams::new(-0.5, 1.0, 1.0).unwrap();
        let b = laplace_limit(LimitKind::Bessel { params: bp }, 1.0, 2.0, 1.5, 1.0, SERIES_TOL).unwrap();
        let c = laplace_limit(
            LimitKind::Trig {
                trig: TrigKind::Cos,
                c: 1.0,
            },
            1.0,
            2.0,
            1.0,
            1.0,
            SERIES_TOL,
        )
        .unwrap();
        assert!(close((PI / 2.0).sqrt() * b.value, c.value, 1e-13));
    }

    #[test]
    fn rl_cos_values() {
        assert!(close(rl_cos(1.0, std::f64::consts::FRAC_PI_2).unwrap(), 1.0, 1e-14));
        assert!(close(rl_cos(1.0, 1.0).unwrap(), 1f64.sin(), 1e-14));
        assert!(close(rl_cos(2.0, 1.0).unwrap(), 0.459_697_694_131_860_282_6, 1e-14));
        assert_eq!(rl_cos(0.5, 0.0).unwrap(), 0.0);
        assert!(rl_cos(1.0, -1.0).is_err());
        assert!(rl_cos(1.0, 8.0).is_err());
        let numeric = rl_integral_numeric(f64::cos, 0.5, 2.0, 1e-12).unwrap();
        assert!(close(rl_cos(0.5, 2.0).unwrap(), numeric, 1e-10));
    }
}
