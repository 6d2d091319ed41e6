//! The pathway fractional integral
//!
//! ```text
//! (P^{(η,α)} f)(x) = x^η ∫₀^{x/(a(1−α))} [1 − a(1−α)t/x]^{η/(1−α)} f(t) dt,   α < 1
//! ```
//!
//! At `α = 0, a = 1` it is `Γ(η+1)` times the Riemann–Liouville integral of
//! order `η+1`; as `α → 1⁻` the kernel tends to `e^{−aηt/x}` and the operator
//! becomes `x^η` times a Laplace transform evaluated at `aη/x`.
//!
//! Images of powers, generalized Bessel functions and circular/hyperbolic
//! functions are available in closed form ([`pathway_power`],
//! [`pathway_bessel`], [`pathway_trig`]) and by quadrature
//! ([`pathway_integral_numeric`]); [`verify`] compares the two.

mod images;
mod verify;

pub use images::{
    laplace_limit, laplace_transform_closed, pathway_bessel, pathway_power, pathway_trig, rl_cos, LimitKind, TrigKind,
};
pub use verify::{verify, VerifyCase, VerifyKind, VerifyReport, GATE};

use serde::{Deserialize, Serialize};

use crate::error::{domain, param, Result};
use crate::quadrature::{tanh_sinh_unit, QuadResult};
use crate::special::gamma;

/// Truncation tolerance for the closed-form series.
pub const SERIES_TOL: f64 = 1e-12;
/// Default quadrature tolerance.
pub const QUAD_TOL: f64 = 1e-9;

/// Order `η`, pathway parameter `α` and scale `a` of the operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathwayParams {
    pub eta: f64,
    pub alpha_pw: f64,
    pub a: f64,
}

impl PathwayParams {
    pub fn new(eta: f64, alpha_pw: f64, a: f64) -> Result<Self> {
        if !(eta > 0.0) || !eta.is_finite() {
            return Err(param(format!("η must be positive, got {eta}")));
        }
        if !(alpha_pw < 1.0) || !alpha_pw.is_finite() {
            return Err(param(format!("pathway parameter must be below 1, got {alpha_pw}")));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(param(format!("scale a must be positive, got {a}")));
        }
        Ok(Self { eta, alpha_pw, a })
    }

    pub(crate) fn validated(&self) -> Result<Self> {
        Self::new(self.eta, self.alpha_pw, self.a)
    }

    /// Kernel exponent `η/(1−α)`.
    pub fn z_exp(&self) -> f64 {
        self.eta / (1.0 - self.alpha_pw)
    }

    /// `a(1−α)`.
    pub fn scale(&self) -> f64 {
        self.a * (1.0 - self.alpha_pw)
    }

    /// Upper integration limit `x/(a(1−α))`.
    pub fn upper_limit(&self, x: f64) -> f64 {
        x / self.scale()
    }
}

/// Which kernel the quadrature integrates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    /// `x^η [1 − a(1−α)t/x]^{η/(1−α)}`, consistent with every closed form.
    #[default]
    Corrected,
    /// `x^{η−1} [1 − a(1−α)t/x]^{η/(1−α)−1}`, which integrates `t^{ρ−1}` to
    /// `x^{η+ρ−1} Γ(ρ)Γ(z)/([a(1−α)]^ρ Γ(z+ρ))` instead.
    Alternate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImageForm {
    ClosedWright,
    Quadrature,
    LaplaceLimit,
}

/// An operator value together with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OperatorImage {
    pub value: f64,
    pub form: ImageForm,
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("operator is evaluated at x > 0, got {x}")));
    }
    Ok(())
}

/// Quadrature of the operator with either kernel, after the substitution
/// `u = a(1−α)t/x` onto `[0, 1]`.
pub fn pathway_integral_with_kernel(
    f: impl Fn(f64) -> f64,
    params: &PathwayParams,
    x: f64,
    kernel: Kernel,
    tol: f64,
) -> Result<QuadResult> {
    let params = params.validated()?;
    check_x(x)?;
    let upper = params.upper_limit(x);
    let z = params.z_exp();
    let (exponent, lead) = match kernel {
        Kernel::Corrected => (z, x.powf(params.eta) * upper),
        Kernel::Alternate => (z - 1.0, x.powf(params.eta - 1.0) * upper),
    };
    let r = tanh_sinh_unit(
        |u, v| {
            let k = v.powf(exponent);
            if k == 0.0 {
                0.0
            } else {
                k * f(upper * u)
            }
        },
        tol,
    )?;
    Ok(QuadResult {
        value: lead * r.value,
        error: lead * r.error,
        ..r
    })
}

/// `(P^{(η,α)} f)(x)` by tanh-sinh quadrature.
pub fn pathway_integral_numeric(f: impl Fn(f64) -> f64, params: &PathwayParams, x: f64, tol: f64) -> Result<f64> {
    pathway_integral_with_kernel(f, params, x, Kernel::Corrected, tol).map(|r| r.value)
}

/// Riemann–Liouville integral `(1/Γ(η)) ∫₀^x (x−t)^{η−1} f(t) dt` by
/// quadrature.
pub fn rl_integral_numeric(f: impl Fn(f64) -> f64, eta: f64, x: f64, tol: f64) -> Result<f64> {
    if !(eta > 0.0) || !eta.is_finite() {
        return Err(param(format!("order must be positive, got {eta}")));
    }
    check_x(x)?;
    let r = tanh_sinh_unit(|u, v| v.powf(eta - 1.0) * f(x * u), tol)?;
    Ok(x.powf(eta) * r.value / gamma(eta)?)
}
