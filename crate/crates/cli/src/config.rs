use std::path::PathBuf;

use anyhow::{bail, ensure, Context, Result};
use pathent::dea::{BinRule, Indicator, SeriesKind, MIN_ANALYSIS_LEN};
use pathent::entropy::{discrete_entropy, ContinuousKind, DiscreteDistribution, DiscreteKind, SampledPdf};
use pathent::kinetics::{KineticsParams, SecondIndex};
use pathent::pathway::{PathwayParams, VerifyKind};
use pathent::special::BesselParams;
use serde::{Deserialize, Serialize};

/// Fully resolved parameters of one invocation. Serializes to JSON and
/// reproduces the same run when fed back through `pathent run`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum RunConfig {
    Entropy(EntropyConfig),
    Generate(GenerateConfig),
    Dea(DeaConfig),
    GaussianCurves(GaussianCurvesConfig),
    PathwayEval(PathwayEvalConfig),
    PathwayVerify(PathwayVerifyConfig),
    Kinetics(KineticsConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputMode {
    /// Probabilities separated by commas, whitespace or newlines.
    Discrete,
    /// Two columns: cell centers on a uniform grid and density values.
    Pdf,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyConfig {
    pub input: PathBuf,
    pub mode: InputMode,
    pub kind: DiscreteKind,
    pub alphas: Vec<f64>,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerateConfig {
    pub series: SeriesKind,
    pub n: usize,
    pub seed: u64,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "from")]
pub enum SeriesSource {
    File { path: PathBuf, column: String },
    Generate { series: SeriesKind, n: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeaConfig {
    pub source: SeriesSource,
    pub indicator: Indicator,
    /// Window lengths; `None` uses the default geometric grid.
    pub t_grid: Option<Vec<usize>>,
    /// Inclusive `t` range of the scaling fit; unset ends follow the grid.
    pub fit_min: Option<usize>,
    pub fit_max: Option<usize>,
    pub bin_rule: BinRule,
    /// Tolerance of the H versus δ classification.
    pub class_tol: f64,
    pub curve_output: Option<PathBuf>,
    pub summary_output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianCurvesConfig {
    pub kind: ContinuousKind,
    pub alphas: Vec<f64>,
    pub t_grid: Vec<f64>,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalTarget {
    Power,
    Bessel,
    Cos,
    Cosh,
    Sin,
    Sinh,
    RlCos,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathwayEvalConfig {
    pub target: EvalTarget,
    pub eta: f64,
    pub alpha_pw: f64,
    pub a: f64,
    pub rho: f64,
    /// Frequency of the trigonometric kinds and `c` of `W_{p,b,c}`.
    pub c: f64,
    pub p: f64,
    pub b: f64,
    pub xs: Vec<f64>,
    /// Evaluate the `α → 1` Laplace-limit form instead.
    pub limit: bool,
    pub with_quadrature: bool,
    pub series_tol: f64,
    pub quad_tol: f64,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathwayVerifyConfig {
    pub kinds: Vec<VerifyKind>,
    pub cases_output: Option<PathBuf>,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Exp,
    Ml,
    Pathway,
    MixtureCheck,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KineticsConfig {
    pub law: Law,
    pub params: KineticsParams,
    pub t: Vec<f64>,
    pub index: SecondIndex,
    pub output: Option<PathBuf>,
    pub points_output: Option<PathBuf>,
}

fn positive(name: &str, v: f64) -> Result<()> {
    ensure!(v > 0.0 && v.is_finite(), "{name} must be positive, got {v}");
    Ok(())
}

impl RunConfig {
    /// Checks every parameter against the preconditions of the library call
    /// it feeds, before any work is done.
    pub fn validate(&self) -> Result<()> {
        match self {
            RunConfig::Entropy(c) => c.validate(),
            RunConfig::Generate(c) => {
                ensure!(
                    c.n >= MIN_ANALYSIS_LEN,
                    "--n must be at least {MIN_ANALYSIS_LEN}, got {}",
                    c.n
                );
                pathent::dea::generate(c.series, MIN_ANALYSIS_LEN, c.seed)?;
                Ok(())
            }
            RunConfig::Dea(c) => c.validate(),
            RunConfig::GaussianCurves(c) => {
                ensure!(
                    matches!(c.kind, ContinuousKind::Tsallis | ContinuousKind::Mathai),
                    "Gaussian curves exist for tsallis and mathai"
                );
                ensure!(!c.alphas.is_empty(), "no orders given");
                ensure!(!c.t_grid.is_empty(), "empty t grid");
                for &t in &c.t_grid {
                    positive("t", t)?;
                }
                for &a in &c.alphas {
                    pathent::entropy::gaussian_entropy_closed(c.kind, a, 1.0)?;
                }
                Ok(())
            }
            RunConfig::PathwayEval(c) => c.validate(),
            RunConfig::PathwayVerify(c) => {
                ensure!(!c.kinds.is_empty(), "no verification kinds given");
                Ok(())
            }
            RunConfig::Kinetics(c) => c.validate(),
        }
    }
}

impl EntropyConfig {
    fn validate(&self) -> Result<()> {
        if self.mode == InputMode::Pdf {
            continuous_kind(self.kind)?;
        }
        if self.kind == DiscreteKind::Shannon {
            return Ok(());
        }
        ensure!(
            !self.alphas.is_empty(),
            "{:?} entropy needs at least one --alpha",
            self.kind
        );
        let probe = DiscreteDistribution::new(vec![0.5, 0.5])?;
        for &a in &self.alphas {
            discrete_entropy(self.kind, a, &probe).with_context(|| format!("order {a}"))?;
        }
        Ok(())
    }
}

/// The kinds defined for densities.
pub fn continuous_kind(kind: DiscreteKind) -> Result<ContinuousKind> {
    Ok(match kind {
        DiscreteKind::Shannon => ContinuousKind::Shannon,
        DiscreteKind::Tsallis => ContinuousKind::Tsallis,
        DiscreteKind::Mathai => ContinuousKind::Mathai,
        other => bail!("{other:?} entropy is defined for discrete distributions only"),
    })
}

impl DeaConfig {
    fn validate(&self) -> Result<()> {
        if let SeriesSource::Generate { series, n, seed } = &self.source {
            ensure!(
                *n >= MIN_ANALYSIS_LEN,
                "--n must be at least {MIN_ANALYSIS_LEN}, got {n}"
            );
            pathent::dea::generate(*series, MIN_ANALYSIS_LEN, *seed)?;
        }
        let probe = SampledPdf::new(0.0, 0.5, vec![1.0, 1.0])?;
        self.indicator.apply(&probe)?;
        let v = match self.bin_rule {
            BinRule::Width(w) => w,
            BinRule::ScaleFraction(f) => f,
        };
        positive("bin parameter", v)?;
        positive("classification tolerance", self.class_tol)?;
        if let Some(grid) = &self.t_grid {
            ensure!(!grid.is_empty(), "empty t grid");
            ensure!(grid[0] >= 1, "window lengths start at 1");
            ensure!(
                grid.windows(2).all(|w| w[0] < w[1]),
                "t grid must be strictly increasing"
            );
        }
        if let (Some(lo), Some(hi)) = (self.fit_min, self.fit_max) {
            ensure!(lo <= hi, "empty fit range [{lo}, {hi}]");
        }
        Ok(())
    }
}

impl PathwayEvalConfig {
    fn validate(&self) -> Result<()> {
        ensure!(!self.xs.is_empty(), "no evaluation points given");
        for &x in &self.xs {
            positive("x", x)?;
        }
        positive("series tolerance", self.series_tol)?;
        positive("quadrature tolerance", self.quad_tol)?;
        if self.target == EvalTarget::RlCos {
            positive("η", self.eta)?;
            ensure!(!self.limit, "rl-cos has no limit form");
            return Ok(());
        }
        let alpha = if self.limit { 0.0 } else { self.alpha_pw };
        PathwayParams::new(self.eta, alpha, self.a)?;
        positive("ρ", self.rho)?;
        ensure!(self.c.is_finite(), "c must be finite");
        if self.target == EvalTarget::Bessel {
            BesselParams::new(self.p, self.b, self.c)?;
            ensure!(self.p + self.rho > 0.0, "ρ + p must be positive");
        }
        ensure!(
            !(self.limit && self.with_quadrature),
            "the quadrature column is available for the operator, not its limit"
        );
        Ok(())
    }
}

impl KineticsConfig {
    fn validate(&self) -> Result<()> {
        let p = &self.params;
        match self.law {
            Law::Exp => {
                positive("N₀", p.n0)?;
                positive("c", p.c)?;
            }
            Law::Ml => {
                positive("N₀", p.n0)?;
                positive("c", p.c)?;
                ensure!(p.nu > 0.0 && p.nu <= 1.0, "ν must lie in (0, 1], got {}", p.nu);
            }
            Law::Pathway => {
                KineticsParams::new(p.n0, p.c, p.nu, p.mu, p.b, p.alpha_k)?;
            }
            Law::MixtureCheck => return Ok(()),
        }
        ensure!(!self.t.is_empty(), "empty t grid");
        for &t in &self.t {
            if self.law == Law::Pathway {
                positive("t", t)?;
            } else {
                ensure!(t >= 0.0 && t.is_finite(), "t must be non-negative, got {t}");
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn samples() -> Vec<RunConfig> {
        vec![
            RunConfig::Entropy(EntropyConfig {
                input: "p.csv".into(),
                mode: InputMode::Discrete,
                kind: DiscreteKind::MathaiExtensive,
                alphas: vec![0.8, 1.2, 0.1 + 0.2],
                output: None,
            }),
            RunConfig::Dea(DeaConfig {
                source: SeriesSource::Generate {
                    series: SeriesKind::Stable { index: 1.5 },
                    n: 65536,
                    seed: u64::MAX,
                },
                indicator: Indicator::MathaiExtensive(1.2),
                t_grid: Some(vec![10, 20, 40]),
                fit_min: Some(10),
                fit_max: Some(300),
                bin_rule: BinRule::ScaleFraction(0.25),
                class_tol: 0.05,
                curve_output: Some("c.csv".into()),
                summary_output: None,
            }),
            RunConfig::PathwayEval(PathwayEvalConfig {
                target: EvalTarget::Bessel,
                eta: 1.0 / 3.0,
                alpha_pw: -0.7,
                a: 2.0,
                rho: 1.5,
                c: -1.0,
                p: 0.5,
                b: 1.0,
                xs: vec![0.1, std::f64::consts::PI],
                limit: false,
                with_quadrature: true,
                series_tol: 1e-12,
                quad_tol: 1e-9,
                output: None,
            }),
            RunConfig::Kinetics(KineticsConfig {
                law: Law::Pathway,
                params: KineticsParams::new(1.0, 1.0, 0.5, 2.0, 1.0, 1.5).unwrap(),
                t: vec![0.25, 1e-300, 7.0],
                index: SecondIndex::Nu,
                output: None,
                points_output: None,
            }),
        ]
    }

    #[test]
    fn json_round_trip_is_lossless() {
        for cfg in samples() {
            let text = serde_json::to_string_pretty(&cfg).unwrap();
            let back: RunConfig = serde_json::from_str(&text).unwrap();
            assert_eq!(back, cfg);
            assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
            cfg.validate().unwrap();
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let mut cfgs = samples();
        if let RunConfig::Entropy(c) = &mut cfgs[0] {
            c.alphas.push(2.5);
        }
        assert!(cfgs[0].validate().is_err());
        if let RunConfig::PathwayEval(c) = &mut cfgs[2] {
            c.alpha_pw = 1.0;
        }
        assert!(cfgs[2].validate().is_err());
        if let RunConfig::Kinetics(c) = &mut cfgs[3] {
            c.params.alpha_k = 1.0;
        }
        assert!(cfgs[3].validate().is_err());
        let pdf_renyi = RunConfig::Entropy(EntropyConfig {
            input: "f.csv".into(),
            mode: InputMode::Pdf,
            kind: DiscreteKind::Renyi,
            alphas: vec![2.0],
            output: None,
        });
        assert!(pdf_renyi.validate().is_err());
    }
}
