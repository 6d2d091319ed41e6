use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::images::{pathway_bessel, pathway_power, pathway_trig, TrigKind};
use super::{pathway_integral_numeric, PathwayParams, QUAD_TOL, SERIES_TOL};
use crate::error::Result;
use crate::special::{bessel_core, BesselParams};

/// Acceptance threshold for `|closed − quadrature|`, absolute below 1 and
/// relative above.
pub const GATE: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyKind {
    Power,
    Bessel,
    Cos,
    Cosh,
    Sin,
    Sinh,
}

impl VerifyKind {
    pub const ALL: [VerifyKind; 6] = [
        VerifyKind::Power,
        VerifyKind::Bessel,
        VerifyKind::Cos,
        VerifyKind::Cosh,
        VerifyKind::Sin,
        VerifyKind::Sinh,
    ];

    fn trig(&self) -> Option<TrigKind> {
        match self {
            VerifyKind::Cos => Some(TrigKind::Cos),
            VerifyKind::Cosh => Some(TrigKind::Cosh),
            VerifyKind::Sin => Some(TrigKind::Sin),
            VerifyKind::Sinh => Some(TrigKind::Sinh),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyCase {
    pub params: PathwayParams,
    pub rho: f64,
    /// Frequency for the trigonometric kinds.
    pub c: Option<f64>,
    pub bessel: Option<BesselParams>,
    pub x: f64,
    pub closed: f64,
    pub numeric: f64,
}

impl VerifyCase {
    pub fn abs_err(&self) -> f64 {
        (self.closed - self.numeric).abs()
    }

    pub fn passes(&self) -> bool {
        self.abs_err() <= GATE * self.closed.abs().max(1.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub kind: VerifyKind,
    pub cases: Vec<VerifyCase>,
    pub max_abs: f64,
    pub max_rel: f64,
    pub pass: bool,
}

struct Input {
    params: PathwayParams,
    rho: f64,
    c: Option<f64>,
    bessel: Option<BesselParams>,
    x: f64,
}

fn grid(kind: VerifyKind) -> Result<Vec<Input>> {
    let mut out = Vec::new();
    match kind {
        VerifyKind::Power => {
            for eta in [0.5, 1.0, 2.0] {
                for rho in [0.5, 1.0, 2.5] {
                    for alpha in [-0.5, 0.0, 0.5] {
                        out.push(Input {
                            params: PathwayParams::new(eta, alpha, 1.0)?,
                            rho,
                            c: None,
                            bessel: None,
                            x: 1.5,
                        });
                    }
                }
            }
        }
        VerifyKind::Bessel => {
            let orders = [(0.5, 1.0, 1.0), (0.0, 1.0, -1.0), (1.0, 2.0, 1.0), (-0.25, 1.0, 1.0)];
            for eta in [1.0, 2.0] {
                for alpha in [0.0, 0.5] {
                    for rho in [1.0, 1.5] {
                        for &(p, b, c) in &orders {
                            for x in [0.5, 1.0, 2.0] {
                                out.push(Input {
                                    params: PathwayParams::new(eta, alpha, 1.0)?,
                                    rho,
                                    c: None,
                                    bessel: Some(BesselParams::new(p, b, c)?),
                                    x,
                                });
                            }
                        }
                    }
                }
            }
        }
        _ => {
            for eta in [1.0, 2.0] {
                for alpha in [0.0, 0.3, 0.7] {
                    for rho in [1.0, 1.5] {
                        for c in [1.0, 2.0] {
                            for x in [0.5, 1.0, 2.0] {
                                out.push(Input {
                                    params: PathwayParams::new(eta, alpha, 1.0)?,
                                    rho,
                                    c: Some(c),
                                    bessel: None,
                                    x,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn run_case(kind: VerifyKind, input: &Input) -> Result<VerifyCase> {
    let Input {
        params,
        rho,
        c,
        bessel,
        x,
    } = *input;
    let (closed, numeric) = match (kind.trig(), bessel) {
        (Some(trig), _) => {
            let c = c.unwrap_or(1.0);
            let closed = pathway_trig(trig, &params, rho, c, x, SERIES_TOL)?.value;
            let numeric = pathway_integral_numeric(|t| t.powf(rho - 1.0) * trig.apply(c * t), &params, x, QUAD_TOL)?;
            (closed, numeric)
        }
        (None, Some(bp)) => {
            let closed = pathway_bessel(&params, rho, &bp, x, SERIES_TOL)?.value;
            // t^{ρ−1} W(t) = 2^{−p} t^{ρ+p−1} ₀Ψ₁(−ct²/4), kept finite as t → 0
            let scale = 2f64.powf(-bp.p);
            let numeric = pathway_integral_numeric(
                |t| scale * t.powf(rho + bp.p - 1.0) * bessel_core(&bp, t, SERIES_TOL).unwrap_or(f64::NAN),
                &params,
                x,
                QUAD_TOL,
            )?;
            (closed, numeric)
        }
        (None, None) => {
            let closed = pathway_power(&params, rho, x)?;
            let numeric = pathway_integral_numeric(|t| t.powf(rho - 1.0), &params, x, QUAD_TOL)?;
            (closed, numeric)
        }
    };
    Ok(VerifyCase {
        params,
        rho,
        c,
        bessel,
        x,
        closed,
        numeric,
    })
}

/// Compares the closed-form image with quadrature over the built-in grid
/// for `kind`.
pub fn verify(kind: VerifyKind) -> Result<VerifyReport> {
    let inputs = grid(kind)?;
    let cases = inputs
        .par_iter()
        .map(|input| run_case(kind, input))
        .collect::<Result<Vec<_>>>()?;
    let max_abs = cases.iter().map(VerifyCase::abs_err).fold(0.0, f64::max);
    let max_rel = cases.iter().map(|c| c.abs_err() / c.closed.abs()).fold(0.0, f64::max);
    let pass = cases.iter().all(VerifyCase::passes);
    Ok(VerifyReport {
        kind,
        cases,
        max_abs,
        max_rel,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(grid(VerifyKind::Power).unwrap().len(), 27);
        assert_eq!(grid(VerifyKind::Cos).unwrap().len(), 72);
        assert_eq!(grid(VerifyKind::Bessel).unwrap().len(), 96);
    }

    #[test]
    fn power_grid_passes() {
        let r = verify(VerifyKind::Power).unwrap();
        assert!(r.pass, "max abs {}", r.max_abs);
    }
}
