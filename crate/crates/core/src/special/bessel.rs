//! Generalized Bessel function of the first kind
//!
//! ```text
//! W_{p,b,c}(z) = Σ_k (−c)^k / (k! Γ(p + (b+1)/2 + k)) · (z/2)^{p+2k}
//! ```
//!
//! With `(b, c) = (1, 1)` this is `J_p`, `(1, −1)` gives `I_p`, and `b = 2`
//! gives the spherical variants scaled by `2/√π`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, param, Result};
use crate::special::wright::WrightSeriesSpec;

/// Order `p`, and the `b`, `c` coefficients of `W_{p,b,c}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselParams {
    pub p: f64,
    pub b: f64,
    pub c: f64,
}

impl BesselParams {
    pub fn new(p: f64, b: f64, c: f64) -> Result<Self> {
        let bp = Self { p, b, c };
        if ![p, b, c].iter().all(|v| v.is_finite()) {
            return Err(param("Bessel parameters must be finite"));
        }
        if !(bp.kappa() > 0.0) {
            return Err(param(format!("κ = p + (b+1)/2 must be positive, got {}", bp.kappa())));
        }
        Ok(bp)
    }

    /// `κ = p + (b+1)/2`.
    pub fn kappa(&self) -> f64 {
        self.p + 0.5 * (self.b + 1.0)
    }
}

/// Evaluates `W_{p,b,c}(z)` as `(z/2)^p · ₀Ψ₁[ ; (κ,1) | −c z²/4]`.
pub fn bessel_w(params: &BesselParams, z: f64, tol: f64) -> Result<f64> {
    let params = BesselParams::new(params.p, params.b, params.c)?;
    let p = params.p;
    let integer_order = p.fract() == 0.0;
    if z < 0.0 && !integer_order {
        return Err(domain(format!(
            "W_p(z) with non-integer order {p} is real only for z ≥ 0, got z = {z}"
        )));
    }
    if z == 0.0 {
        if p > 0.0 {
            return Ok(0.0);
        }
        if p < 0.0 {
            return Err(domain(format!("W_p has a pole at z = 0 for p = {p} < 0")));
        }
    }
    let series = bessel_core(&params, z, tol)?;
    let half = 0.5 * z;
    let lead = if integer_order {
        half.powi(p as i32)
    } else {
        half.powf(p)
    };
    Ok(lead * series)
}

/// The entire part `W_{p,b,c}(z) / (z/2)^p = ₀Ψ₁[ ; (κ,1) | −c z²/4]`.
pub(crate) fn bessel_core(params: &BesselParams, z: f64, tol: f64) -> Result<f64> {
    let spec = WrightSeriesSpec::new(vec![], vec![(params.kappa(), 1.0)])?;
    spec.eval_scaled(-params.c * z * z / 4.0, 0.0, tol)
}
