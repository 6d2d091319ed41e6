//! `pathent`: generalized entropies, diffusion entropy analysis, pathway
//! fractional integrals and relaxation kinetics from the command line.
//!
//! Tables go to stdout (or `--output`) as CSV; fit summaries are JSON. Every
//! invocation resolves to a [`config::RunConfig`], which `--save-config`
//! writes out and `pathent run` replays.

mod config;
mod io;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{ensure, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use pathent::dea::{BinRule, Indicator, SeriesKind};
use pathent::entropy::{ContinuousKind, DiscreteKind};
use pathent::kinetics::{KineticsParams, SecondIndex};
use pathent::pathway::{VerifyKind, QUAD_TOL, SERIES_TOL};

use config::*;

#[derive(Parser)]
#[command(
    name = "pathent",
    version,
    about = "Generalized entropies, DEA, pathway integrals and fractional kinetics"
)]
struct Cli {
    /// Write the resolved run configuration as JSON before running.
    #[arg(long, global = true, value_name = "PATH")]
    save_config: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Entropy of a discrete distribution or a gridded density.
    Entropy(EntropyArgs),
    /// Synthetic noise series as a one-column CSV.
    Generate {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Diffusion entropy analysis of a series, or the closed-form Gaussian curves.
    Dea(DeaArgs),
    /// Pathway fractional integral images and their verification.
    Pathway {
        #[command(subcommand)]
        cmd: PathwayCmd,
    },
    /// Relaxation laws on a time grid, or the rate-mixture check.
    Kinetics(KineticsArgs),
    /// Replay a configuration saved with --save-config.
    Run { config: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Shannon,
    Renyi,
    HavrdaCharvat,
    Tsallis,
    Mathai,
    MathaiExtensive,
}

impl From<KindArg> for DiscreteKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Shannon => DiscreteKind::Shannon,
            KindArg::Renyi => DiscreteKind::Renyi,
            KindArg::HavrdaCharvat => DiscreteKind::HavrdaCharvat,
            KindArg::Tsallis => DiscreteKind::Tsallis,
            KindArg::Mathai => DiscreteKind::Mathai,
            KindArg::MathaiExtensive => DiscreteKind::MathaiExtensive,
        }
    }
}

#[derive(Args)]
struct EntropyArgs {
    /// Input file, `-` for stdin.
    #[arg(long, short)]
    input: PathBuf,
    /// Read `x,f` rows of a density on evenly spaced cell centers.
    #[arg(long)]
    pdf: bool,
    #[arg(long, value_enum, default_value = "shannon")]
    kind: KindArg,
    /// Orders, comma separated.
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<f64>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenCommon {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenKind {
    /// iid normal with variance 2D.
    Gaussian {
        #[arg(long, default_value_t = 0.5)]
        diffusion: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    /// iid symmetric stable with unit scale.
    Stable {
        #[arg(long, default_value_t = 1.5)]
        index: f64,
        #[command(flatten)]
        common: GenCommon,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenArg {
    Gaussian,
    Stable,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndicatorArg {
    Shannon,
    Tsallis,
    Mathai,
    MathaiExtensive,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveKindArg {
    Tsallis,
    Mathai,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "generate", "figure1"])))]
struct DeaArgs {
    /// Series file, `-` for stdin.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Column of the input by header name or 0-based index.
    #[arg(long, default_value = "0")]
    column: String,
    /// Analyze a generated series instead of a file.
    #[arg(long, value_enum, requires = "seed")]
    generate: Option<GenArg>,
    #[arg(long, default_value_t = 65536)]
    n: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 0.5)]
    diffusion: f64,
    #[arg(long, default_value_t = 1.5)]
    index: f64,
    /// Emit the closed-form Gaussian entropy curves instead of analyzing data.
    #[arg(long, value_enum)]
    figure1: Option<CurveKindArg>,
    #[arg(long, value_enum, default_value = "shannon")]
    indicator: IndicatorArg,
    /// Indicator order; with --figure1, a comma separated list.
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<f64>,
    /// Window lengths, comma separated. With --figure1 any positive times.
    #[arg(long, value_delimiter = ',')]
    t_grid: Vec<f64>,
    #[arg(long)]
    fit_min: Option<usize>,
    #[arg(long)]
    fit_max: Option<usize>,
    /// Fixed histogram bin width.
    #[arg(long, conflicts_with = "bin_fraction")]
    bin_width: Option<f64>,
    /// Bin width as a fraction of the robust spread at the smallest t.
    #[arg(long, default_value_t = 0.25)]
    bin_fraction: f64,
    #[arg(long, default_value_t = 0.05)]
    class_tol: f64,
    /// Curve CSV path (default stdout).
    #[arg(long)]
    curve_out: Option<PathBuf>,
    /// Summary JSON path (default stdout, or stderr when the curve is on stdout).
    #[arg(long)]
    summary_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum PathwayCmd {
    /// Closed-form operator images at one or more points.
    Eval(EvalArgs),
    /// Closed forms against quadrature on the built-in grids.
    Verify {
        #[arg(value_enum, default_value = "all")]
        kind: VerifyArg,
        /// Per-case CSV.
        #[arg(long)]
        cases_out: Option<PathBuf>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Power,
    Bessel,
    Cos,
    Cosh,
    Sin,
    Sinh,
    RlCos,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyArg {
    Power,
    Bessel,
    Cos,
    Cosh,
    Sin,
    Sinh,
    Trig,
    All,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    target: TargetArg,
    #[arg(long)]
    eta: f64,
    /// Pathway parameter, below 1.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    #[arg(long, default_value_t = 1.0)]
    rho: f64,
    /// Frequency (trigonometric) or `c` of W_{p,b,c} (bessel).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    c: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    p: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    b: f64,
    /// Evaluation points, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    x: Vec<f64>,
    /// Evaluate the α → 1 Laplace-limit form.
    #[arg(long)]
    limit: bool,
    /// Add a column computed by quadrature of the operator.
    #[arg(long)]
    quadrature: bool,
    #[arg(long, default_value_t = SERIES_TOL)]
    series_tol: f64,
    #[arg(long, default_value_t = QUAD_TOL)]
    quad_tol: f64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum LawArg {
    Exp,
    Ml,
    Pathway,
    MixtureCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexArg {
    Mu,
    Nu,
}

#[derive(Args)]
struct KineticsArgs {
    #[arg(value_enum)]
    law: LawArg,
    #[arg(long, default_value_t = 1.0)]
    n0: f64,
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    #[arg(long, default_value_t = 1.0)]
    nu: f64,
    #[arg(long, default_value_t = 1.0)]
    mu: f64,
    #[arg(long, default_value_t = 1.0)]
    b: f64,
    /// Pathway parameter of the rate distribution, above 1.
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    /// Explicit times, comma separated; overrides --t-max/--points.
    #[arg(long, value_delimiter = ',')]
    t: Vec<f64>,
    #[arg(long, default_value_t = 10.0)]
    t_max: f64,
    /// Grid t_k = t_max k / points, k = 1..points.
    #[arg(long, default_value_t = 50)]
    points: usize,
    /// Second Prabhakar index of the conditional density (mixture-check).
    #[arg(long, value_enum, default_value = "mu")]
    index: IndexArg,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Per-point CSV of the mixture check.
    #[arg(long)]
    points_out: Option<PathBuf>,
}

fn entropy_config(a: EntropyArgs) -> RunConfig {
    RunConfig::Entropy(EntropyConfig {
        input: a.input,
        mode: if a.pdf { InputMode::Pdf } else { InputMode::Discrete },
        kind: a.kind.into(),
        alphas: a.alpha,
        output: a.output,
    })
}

fn generate_config(kind: GenKind) -> RunConfig {
    let (series, common) = match kind {
        GenKind::Gaussian { diffusion, common } => (SeriesKind::Gaussian { diffusion }, common),
        GenKind::Stable { index, common } => (SeriesKind::Stable { index }, common),
    };
    RunConfig::Generate(GenerateConfig {
        series,
        n: common.n,
        seed: common.seed,
        output: common.output,
    })
}

fn dea_config(a: DeaArgs) -> Result<RunConfig> {
    if let Some(kind) = a.figure1 {
        return Ok(RunConfig::GaussianCurves(GaussianCurvesConfig {
            kind: match kind {
                CurveKindArg::Tsallis => ContinuousKind::Tsallis,
                CurveKindArg::Mathai => ContinuousKind::Mathai,
            },
            alphas: if a.alpha.is_empty() {
                vec![0.8, 1.0, 1.2]
            } else {
                a.alpha
            },
            t_grid: if a.t_grid.is_empty() {
                run::geometric(1.0, 1000.0, 25)
            } else {
                a.t_grid
            },
            output: a.curve_out,
        }));
    }
    let source = match (a.input, a.generate) {
        (Some(path), _) => SeriesSource::File { path, column: a.column },
        (None, Some(g)) => SeriesSource::Generate {
            series: match g {
                GenArg::Gaussian => SeriesKind::Gaussian { diffusion: a.diffusion },
                GenArg::Stable => SeriesKind::Stable { index: a.index },
            },
            n: a.n,
            seed: a.seed.context("--seed is required with --generate")?,
        },
        (None, None) => unreachable!("clap enforces a source"),
    };
    let order = || -> Result<f64> {
        ensure!(a.alpha.len() == 1, "the indicator takes exactly one --alpha");
        Ok(a.alpha[0])
    };
    let indicator = match a.indicator {
        IndicatorArg::Shannon => Indicator::Shannon,
        IndicatorArg::Tsallis => Indicator::Tsallis(order()?),
        IndicatorArg::Mathai => Indicator::Mathai(order()?),
        IndicatorArg::MathaiExtensive => Indicator::MathaiExtensive(order()?),
    };
    let t_grid = if a.t_grid.is_empty() {
        None
    } else {
        let grid = a
            .t_grid
            .iter()
            .map(|&t| {
                ensure!(
                    t >= 1.0 && t.fract() == 0.0,
                    "window lengths are positive integers, got {t}"
                );
                Ok(t as usize)
            })
            .collect::<Result<_>>()?;
        Some(grid)
    };
    Ok(RunConfig::Dea(DeaConfig {
        source,
        indicator,
        t_grid,
        fit_min: a.fit_min,
        fit_max: a.fit_max,
        bin_rule: match a.bin_width {
            Some(w) => BinRule::Width(w),
            None => BinRule::ScaleFraction(a.bin_fraction),
        },
        class_tol: a.class_tol,
        curve_output: a.curve_out,
        summary_output: a.summary_out,
    }))
}

fn pathway_config(cmd: PathwayCmd) -> RunConfig {
    match cmd {
        PathwayCmd::Eval(a) => RunConfig::PathwayEval(PathwayEvalConfig {
            target: match a.target {
                TargetArg::Power => EvalTarget::Power,
                TargetArg::Bessel => EvalTarget::Bessel,
                TargetArg::Cos => EvalTarget::Cos,
                TargetArg::Cosh => EvalTarget::Cosh,
                TargetArg::Sin => EvalTarget::Sin,
                TargetArg::Sinh => EvalTarget::Sinh,
                TargetArg::RlCos => EvalTarget::RlCos,
            },
            eta: a.eta,
            alpha_pw: a.alpha,
            a: a.a,
            rho: a.rho,
            c: a.c,
            p: a.p,
            b: a.b,
            xs: a.x,
            limit: a.limit,
            with_quadrature: a.quadrature,
            series_tol: a.series_tol,
            quad_tol: a.quad_tol,
            output: a.output,
        }),
        PathwayCmd::Verify {
            kind,
            cases_out,
            output,
        } => {
            use VerifyKind as V;
            let kinds = match kind {
                VerifyArg::Power => vec![V::Power],
                VerifyArg::Bessel => vec![V::Bessel],
                VerifyArg::Cos => vec![V::Cos],
                VerifyArg::Cosh => vec![V::Cosh],
                VerifyArg::Sin => vec![V::Sin],
                VerifyArg::Sinh => vec![V::Sinh],
                VerifyArg::Trig => vec![V::Cos, V::Cosh, V::Sin, V::Sinh],
                VerifyArg::All => V::ALL.to_vec(),
            };
            RunConfig::PathwayVerify(PathwayVerifyConfig {
                kinds,
                cases_output: cases_out,
                output,
            })
        }
    }
}

fn kinetics_config(a: KineticsArgs) -> Result<RunConfig> {
    let t = if a.t.is_empty() {
        ensure!(a.points >= 1, "--points must be at least 1");
        ensure!(a.t_max > 0.0 && a.t_max.is_finite(), "--t-max must be positive");
        (1..=a.points).map(|k| a.t_max * k as f64 / a.points as f64).collect()
    } else {
        a.t
    };
    Ok(RunConfig::Kinetics(KineticsConfig {
        law: match a.law {
            LawArg::Exp => Law::Exp,
            LawArg::Ml => Law::Ml,
            LawArg::Pathway => Law::Pathway,
            LawArg::MixtureCheck => Law::MixtureCheck,
        },
        params: KineticsParams {
            n0: a.n0,
            c: a.c,
            nu: a.nu,
            mu: a.mu,
            b: a.b,
            alpha_k: a.alpha,
        },
        t,
        index: match a.index {
            IndexArg::Mu => SecondIndex::Mu,
            IndexArg::Nu => SecondIndex::Nu,
        },
        output: a.output,
        points_output: a.points_out,
    }))
}

fn resolve(cmd: Cmd) -> Result<RunConfig> {
    Ok(match cmd {
        Cmd::Entropy(a) => entropy_config(a),
        Cmd::Generate { kind } => generate_config(kind),
        Cmd::Dea(a) => dea_config(a)?,
        Cmd::Pathway { cmd } => pathway_config(cmd),
        Cmd::Kinetics(a) => kinetics_config(a)?,
        Cmd::Run { config } => {
            let text = io::read_text(&config)?;
            serde_json::from_str(&text).with_context(|| format!("{}", config.display()))?
        }
    })
}

fn real_main() -> Result<bool> {
    let cli = Cli::parse();
    let cfg = resolve(cli.command)?;
    cfg.validate()?;
    if let Some(path) = &cli.save_config {
        let json = serde_json::to_string_pretty(&cfg)? + "\n";
        std::fs::write(path, json).with_context(|| format!("{}", path.display()))?;
    }
    run::execute(&cfg)
}

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("pathent: gate failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
