//! The pathway density `f₁(x) = c₁ x^ρ [1 − a(1−α) x^δ]^{1/(1−α)}`, the
//! stationary point of Mathai's entropy under two fixed moments.
//!
//! For `α < 1` the support is `[0, (a(1−α))^{−1/δ}]` and `c₁` has a beta
//! function closed form. The `α > 1` (type-2 beta) and `α = 1` (generalized
//! gamma) branches are normalized by quadrature.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::linalg::solve3;
use crate::quadrature::{integrate, integrate_half_line};
use crate::special::log_beta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathwayBranch {
    /// `α < 1`, compact support.
    TypeOneBeta,
    /// `1 < α < 2`, power-law tail.
    TypeTwoBeta,
    /// `α = 1`, `x^ρ exp(−a x^δ)`.
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathwayDensity {
    pub rho: f64,
    pub a: f64,
    pub alpha_pw: f64,
    pub delta_exp: f64,
    pub c1: f64,
}

/// Type-1 beta pathway density with its closed-form normalizing constant.
pub fn pathway_density_make(rho: f64, a: f64, alpha_pw: f64, delta_exp: f64) -> Result<PathwayDensity> {
    check_common(rho, a, delta_exp)?;
    if !(alpha_pw < 1.0) {
        return Err(param(format!("closed-form normalization needs α < 1, got {alpha_pw}")));
    }
    let shape = (rho + 1.0) / delta_exp;
    let c1 = (delta_exp.ln() + shape * (a * (1.0 - alpha_pw)).ln()
        - log_beta(shape, (2.0 - alpha_pw) / (1.0 - alpha_pw))?)
    .exp();
    Ok(PathwayDensity {
        rho,
        a,
        alpha_pw,
        delta_exp,
        c1,
    })
}

fn check_common(rho: f64, a: f64, delta_exp: f64) -> Result<()> {
    if !(rho > -1.0) || !(a > 0.0) || !(delta_exp > 0.0) {
        return Err(param(format!(
            "pathway density needs ρ > −1, a > 0, δ > 0; got ρ={rho}, a={a}, δ={delta_exp}"
        )));
    }
    Ok(())
}

impl PathwayDensity {
    /// Any branch with `α < 2`, normalized by quadrature to `tol`.
    pub fn with_numeric_normalization(rho: f64, a: f64, alpha_pw: f64, delta_exp: f64, tol: f64) -> Result<Self> {
        check_common(rho, a, delta_exp)?;
        if !(alpha_pw < 2.0) {
            return Err(param(format!("pathway parameter must be below 2, got {alpha_pw}")));
        }
        if alpha_pw > 1.0 && !(delta_exp / (alpha_pw - 1.0) > rho + 1.0) {
            return Err(param("type-2 beta density is not integrable: need δ/(α−1) > ρ+1"));
        }
        let mut d = Self {
            rho,
            a,
            alpha_pw,
            delta_exp,
            c1: 1.0,
        };
        let mass = match d.support_end() {
            Some(end) => integrate(|x| d.eval(x), 0.0, end, tol)?.value,
            None => integrate_half_line(|x| d.eval(x), tol)?.value,
        };
        d.c1 = 1.0 / mass;
        Ok(d)
    }

    pub fn branch(&self) -> PathwayBranch {
        if self.alpha_pw < 1.0 {
            PathwayBranch::TypeOneBeta
        } else if self.alpha_pw > 1.0 {
            PathwayBranch::TypeTwoBeta
        } else {
            PathwayBranch::Gamma
        }
    }

    /// Right end of the support, finite only for `α < 1`.
    pub fn support_end(&self) -> Option<f64> {
        (self.alpha_pw < 1.0).then(|| (self.a * (1.0 - self.alpha_pw)).powf(-1.0 / self.delta_exp))
    }

    /// `f₁(x)`, zero for `x < 0` and outside the support.
    pub fn eval(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        let xd = x.powf(self.delta_exp);
        let tail = match self.branch() {
            PathwayBranch::TypeOneBeta => {
                let base = 1.0 - self.a * (1.0 - self.alpha_pw) * xd;
                if base <= 0.0 {
                    return 0.0;
                }
                base.powf(1.0 / (1.0 - self.alpha_pw))
            }
            PathwayBranch::TypeTwoBeta => {
                (1.0 + self.a * (self.alpha_pw - 1.0) * xd).powf(-1.0 / (self.alpha_pw - 1.0))
            }
            PathwayBranch::Gamma => (-self.a * xd).exp(),
        };
        self.c1 * x.powf(self.rho) * tail
    }

    /// `(2−α) f₁^{1−α} / (x^{ρ(1−α)} [1 − a(1−α) x^δ])`, constant on the
    /// interior of the support when `f₁` solves the Euler equation.
    pub fn euler_ratio(&self, x: f64) -> f64 {
        let one_minus = 1.0 - self.alpha_pw;
        (2.0 - self.alpha_pw) * self.eval(x).powf(one_minus)
            / (x.powf(self.rho * one_minus) * (1.0 - self.a * one_minus * x.powf(self.delta_exp)))
    }
}

/// Outcome of [`maximality_witness`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaximalityReport {
    pub entropy_at_density: f64,
    /// Entropy after each perturbation.
    pub perturbed: Vec<f64>,
    /// Largest `|∫h g|` over the preserved moments, relative to `∫|h| g`.
    pub worst_constraint_leak: f64,
}

impl MaximalityReport {
    pub fn holds(&self) -> bool {
        self.perturbed.iter().all(|&m| m <= self.entropy_at_density)
    }
}

/// Perturbs a type-1 density in directions that keep `∫f`,
/// `∫x^{ρ(1−α)} f` and `∫x^{ρ(1−α)+δ} f` fixed, and reports Mathai's entropy
/// of order α before and after each step.
///
/// Perturbations are `h = step · f · q / max|q|` with `q` a random cosine
/// series projected (in the `f`-weighted inner product) off the three moment
/// functions, so `f + h` stays non-negative.
pub fn maximality_witness(
    density: &PathwayDensity,
    perturbations: usize,
    step: f64,
    seed: u64,
) -> Result<MaximalityReport> {
    const CELLS: usize = 4000;
    const MODES: usize = 6;
    let end = density
        .support_end()
        .ok_or_else(|| param("maximality witness needs a type-1 (α < 1) density"))?;
    let alpha = density.alpha_pw;
    let dx = end / CELLS as f64;
    let xs: Vec<f64> = (0..CELLS).map(|i| (i as f64 + 0.5) * dx).collect();
    let f: Vec<f64> = xs.iter().map(|&x| density.eval(x)).collect();
    let lead = density.rho * (1.0 - alpha);
    let basis: [Vec<f64>; 3] = [
        vec![1.0; CELLS],
        xs.iter().map(|x| x.powf(lead)).collect(),
        xs.iter().map(|x| x.powf(lead + density.delta_exp)).collect(),
    ];
    let mathai = |g: &[f64]| -> f64 {
        let s: f64 = g.iter().filter(|&&v| v > 0.0).map(|v| v.powf(2.0 - alpha)).sum::<f64>() * dx;
        (s - 1.0) / (alpha - 1.0)
    };

    let mut gram = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            gram[i][j] = (0..CELLS).map(|n| f[n] * basis[i][n] * basis[j][n]).sum::<f64>() * dx;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perturbed = Vec::with_capacity(perturbations);
    let mut worst_leak: f64 = 0.0;
    for _ in 0..perturbations {
        let coeffs: Vec<f64> = (0..MODES).map(|_| StandardNormal.sample(&mut rng)).collect();
        let mut q: Vec<f64> = xs
            .iter()
            .map(|&x| {
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(m, c)| c * ((m + 1) as f64 * std::f64::consts::PI * x / end).cos())
                    .sum()
            })
            .collect();
        let mut rhs = [0.0; 3];
        for (i, r) in rhs.iter_mut().enumerate() {
            *r = (0..CELLS).map(|n| f[n] * q[n] * basis[i][n]).sum::<f64>() * dx;
        }
        let c = solve3(gram, rhs)?;
        for n in 0..CELLS {
            q[n] -= c[0] * basis[0][n] + c[1] * basis[1][n] + c[2] * basis[2][n];
        }
        let peak = q.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let h: Vec<f64> = (0..CELLS).map(|n| step * f[n] * q[n] / peak).collect();
        for b in &basis {
            let leak: f64 = (0..CELLS).map(|n| h[n] * b[n]).sum::<f64>();
            let scale: f64 = (0..CELLS).map(|n| (h[n] * b[n]).abs()).sum::<f64>();
            worst_leak = worst_leak.max(leak.abs() / scale);
        }
        let g: Vec<f64> = f.iter().zip(&h).map(|(a, b)| a + b).collect();
        perturbed.push(mathai(&g));
    }
    Ok(MaximalityReport {
        entropy_at_density: mathai(&f),
        perturbed,
        worst_constraint_leak: worst_leak,
    })
}
