use anyhow::{ensure, Context, Result};
use pathent::dea::{
    classify, default_t_grid, entropy_curve, fit_delta, fit_nonstationary, generate, variance_scaling, HurstFit,
    Indicator, NonstationaryFit, ScalingClass, ScalingFit, TimeSeries,
};
use pathent::entropy::{
    continuous_entropy, discrete_entropy, gaussian_entropy_closed, DiscreteDistribution, DiscreteKind, SampledPdf,
};
use pathent::kinetics::{
    default_mixture_grid, exponential_decay, mixture_check, ml_decay, unconditional_density, MIXTURE_GATE,
};
use pathent::pathway::{
    laplace_limit, pathway_bessel, pathway_integral_numeric, pathway_power, pathway_trig, rl_cos, rl_integral_numeric,
    verify, ImageForm, LimitKind, OperatorImage, PathwayParams, TrigKind, GATE,
};
use pathent::special::{bessel_w, BesselParams};
use serde::Serialize;

use crate::config::*;
use crate::io::{csv, emit, fmt_num, parse_table, read_text, InputError};

/// Runs a validated configuration. Returns whether every gate passed.
pub fn execute(cfg: &RunConfig) -> Result<bool> {
    cfg.validate()?;
    match cfg {
        RunConfig::Entropy(c) => entropy(c),
        RunConfig::Generate(c) => {
            let series = generate(c.series, c.n, c.seed)?;
            let rows = series.values().iter().map(|&v| vec![fmt_num(v)]);
            emit(c.output.as_ref(), &csv(&["xi"], rows))?;
            Ok(true)
        }
        RunConfig::Dea(c) => dea(c),
        RunConfig::GaussianCurves(c) => gaussian_curves(c),
        RunConfig::PathwayEval(c) => pathway_eval(c),
        RunConfig::PathwayVerify(c) => pathway_verify(c),
        RunConfig::Kinetics(c) => kinetics(c),
    }
}

fn name_of<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => "?".into(),
    }
}

fn entropy(c: &EntropyConfig) -> Result<bool> {
    let text = read_text(&c.input)?;
    let src = c.input.display().to_string();
    let alphas = if c.kind == DiscreteKind::Shannon {
        vec![1.0]
    } else {
        c.alphas.clone()
    };
    let values: Vec<f64> = match c.mode {
        InputMode::Discrete => {
            let p = DiscreteDistribution::new(parse_table(&text, &src)?.flatten()).with_context(|| src.clone())?;
            alphas
                .iter()
                .map(|&a| discrete_entropy(c.kind, a, &p))
                .collect::<pathent::Result<_>>()?
        }
        InputMode::Pdf => {
            let pdf = read_pdf(&text, &src)?;
            let kind = continuous_kind(c.kind)?;
            alphas
                .iter()
                .map(|&a| continuous_entropy(kind, a, &pdf))
                .collect::<pathent::Result<_>>()?
        }
    };
    let kind = name_of(&c.kind);
    let rows = alphas
        .iter()
        .zip(&values)
        .map(|(&a, &v)| vec![kind.clone(), fmt_num(a), fmt_num(v)]);
    emit(c.output.as_ref(), &csv(&["kind", "alpha", "entropy"], rows))?;
    Ok(true)
}

/// Two-column `(x, f)` table with `x` the centers of equal cells.
fn read_pdf(text: &str, src: &str) -> Result<SampledPdf> {
    let table = parse_table(text, src)?;
    let xs = table.column(0, src)?;
    let fs = table.column(1, src)?;
    let content = |msg: String| InputError::Content {
        source_name: src.into(),
        msg,
    };
    ensure!(xs.len() >= 2, content("a density needs at least two cells".into()));
    let dx = xs[1] - xs[0];
    ensure!(dx > 0.0, content("cell centers must increase".into()));
    for (k, w) in xs.windows(2).enumerate() {
        if ((w[1] - w[0]) - dx).abs() > 1e-6 * dx {
            return Err(InputError::Parse {
                source_name: src.into(),
                line: table.rows[k + 1].0,
                msg: format!("cell centers must be evenly spaced (step {dx})"),
            }
            .into());
        }
    }
    SampledPdf::new(xs[0] - 0.5 * dx, dx, fs).with_context(|| src.to_string())
}

fn gaussian_curves(c: &GaussianCurvesConfig) -> Result<bool> {
    let mut header = vec!["t".to_string()];
    header.extend(c.alphas.iter().map(|&a| format!("alpha_{}", fmt_num(a))));
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let rows = c
        .t_grid
        .iter()
        .map(|&t| {
            let mut row = vec![fmt_num(t)];
            for &a in &c.alphas {
                row.push(fmt_num(gaussian_entropy_closed(c.kind, a, t)?));
            }
            Ok(row)
        })
        .collect::<pathent::Result<Vec<_>>>()?;
    emit(c.output.as_ref(), &csv(&header, rows))?;
    Ok(true)
}

#[derive(Serialize)]
struct DeaSummary {
    n: usize,
    indicator: Indicator,
    bin_width: f64,
    t_grid: Vec<usize>,
    scaling_fit: ScalingFit,
    /// Absent when the grid is too short for the quadratic fit.
    nonstationary_fit: Option<NonstationaryFit>,
    variance_fit: HurstFit,
    classification: ScalingClass,
}

fn load_series(source: &SeriesSource) -> Result<TimeSeries> {
    match source {
        SeriesSource::File { path, column } => {
            let src = path.display().to_string();
            let table = parse_table(&read_text(path)?, &src)?;
            let idx = table.column_index(column, &src)?;
            Ok(TimeSeries::new(table.column(idx, &src)?)?)
        }
        SeriesSource::Generate { series, n, seed } => Ok(generate(*series, *n, *seed)?),
    }
}

fn dea(c: &DeaConfig) -> Result<bool> {
    let series = load_series(&c.source)?;
    let grid = c.t_grid.clone().unwrap_or_else(|| default_t_grid(series.len()));
    let curve = entropy_curve(&series, c.indicator, &grid, c.bin_rule)?;
    let lo = c.fit_min.unwrap_or(grid[0]);
    let hi = c.fit_max.unwrap_or(grid[grid.len() - 1]);
    let scaling_fit = fit_delta(&curve, lo, hi)?;
    let variance_fit = variance_scaling(&series, &grid)?;
    let summary = DeaSummary {
        n: series.len(),
        indicator: c.indicator,
        bin_width: curve.bin_width,
        classification: classify(variance_fit.hurst, scaling_fit.delta, c.class_tol),
        t_grid: grid,
        scaling_fit,
        nonstationary_fit: fit_nonstationary(&curve).ok(),
        variance_fit,
    };
    let rows = curve.points.iter().map(|p| vec![p.t.to_string(), fmt_num(p.s)]);
    emit(c.curve_output.as_ref(), &csv(&["t", "entropy"], rows))?;
    let json = serde_json::to_string_pretty(&summary)? + "\n";
    match (&c.summary_output, &c.curve_output) {
        (Some(p), _) => emit(Some(p), &json)?,
        (None, Some(_)) => emit(None, &json)?,
        (None, None) => eprint!("{json}"),
    }
    Ok(true)
}

fn trig_kind(t: EvalTarget) -> Option<TrigKind> {
    match t {
        EvalTarget::Cos => Some(TrigKind::Cos),
        EvalTarget::Cosh => Some(TrigKind::Cosh),
        EvalTarget::Sin => Some(TrigKind::Sin),
        EvalTarget::Sinh => Some(TrigKind::Sinh),
        _ => None,
    }
}

fn eval_point(c: &PathwayEvalConfig, x: f64) -> Result<(f64, String)> {
    let tag = |img: OperatorImage| (img.value, name_of(&img.form));
    if c.target == EvalTarget::RlCos {
        return Ok((rl_cos(c.eta, x)?, "mittag_leffler".into()));
    }
    let bp = BesselParams { p: c.p, b: c.b, c: c.c };
    if c.limit {
        let kind = match c.target {
            EvalTarget::Power => LimitKind::Power,
            EvalTarget::Bessel => LimitKind::Bessel { params: bp },
            t => LimitKind::Trig {
                trig: trig_kind(t).expect("trigonometric target"),
                c: c.c,
            },
        };
        return Ok(tag(laplace_limit(kind, c.a, c.eta, c.rho, x, c.series_tol)?));
    }
    let params = PathwayParams::new(c.eta, c.alpha_pw, c.a)?;
    Ok(match c.target {
        EvalTarget::Power => (pathway_power(&params, c.rho, x)?, name_of(&ImageForm::ClosedWright)),
        EvalTarget::Bessel => tag(pathway_bessel(&params, c.rho, &bp, x, c.series_tol)?),
        t => tag(pathway_trig(
            trig_kind(t).expect("trigonometric target"),
            &params,
            c.rho,
            c.c,
            x,
            c.series_tol,
        )?),
    })
}

fn quadrature_point(c: &PathwayEvalConfig, x: f64) -> Result<f64> {
    if c.target == EvalTarget::RlCos {
        return Ok(rl_integral_numeric(f64::cos, c.eta, x, c.quad_tol)?);
    }
    let params = PathwayParams::new(c.eta, c.alpha_pw, c.a)?;
    let rho = c.rho;
    let v = match c.target {
        EvalTarget::Power => pathway_integral_numeric(|t| t.powf(rho - 1.0), &params, x, c.quad_tol)?,
        EvalTarget::Bessel => {
            let bp = BesselParams::new(c.p, c.b, c.c)?;
            pathway_integral_numeric(
                |t| t.powf(rho - 1.0) * bessel_w(&bp, t, c.series_tol).unwrap_or(f64::NAN),
                &params,
                x,
                c.quad_tol,
            )?
        }
        t => {
            let kind = trig_kind(t).expect("trigonometric target");
            pathway_integral_numeric(|t| t.powf(rho - 1.0) * kind.apply(c.c * t), &params, x, c.quad_tol)?
        }
    };
    Ok(v)
}

fn pathway_eval(c: &PathwayEvalConfig) -> Result<bool> {
    let mut header = vec!["x", "value", "form"];
    if c.with_quadrature {
        header.push("quadrature");
    }
    let rows =
        c.xs.iter()
            .map(|&x| {
                let (v, form) = eval_point(c, x).with_context(|| format!("x = {x}"))?;
                let mut row = vec![fmt_num(x), fmt_num(v), form];
                if c.with_quadrature {
                    row.push(fmt_num(quadrature_point(c, x).with_context(|| format!("x = {x}"))?));
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
    emit(c.output.as_ref(), &csv(&header, rows))?;
    Ok(true)
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt_num).unwrap_or_default()
}

fn pathway_verify(c: &PathwayVerifyConfig) -> Result<bool> {
    let reports = c
        .kinds
        .iter()
        .map(|&k| verify(k))
        .collect::<pathent::Result<Vec<_>>>()?;
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" }.to_string();
    let rows = reports.iter().map(|r| {
        vec![
            name_of(&r.kind),
            r.cases.len().to_string(),
            fmt_num(r.max_abs),
            fmt_num(r.max_rel),
            fmt_num(GATE),
            verdict(r.pass),
        ]
    });
    emit(
        c.output.as_ref(),
        &csv(&["kind", "cases", "max_abs", "max_rel", "gate", "result"], rows),
    )?;
    if let Some(path) = &c.cases_output {
        let rows = reports.iter().flat_map(|r| {
            r.cases.iter().map(move |k| {
                vec![
                    name_of(&r.kind),
                    fmt_num(k.params.eta),
                    fmt_num(k.params.alpha_pw),
                    fmt_num(k.params.a),
                    fmt_num(k.rho),
                    opt(k.c.or(k.bessel.map(|b| b.c))),
                    opt(k.bessel.map(|b| b.p)),
                    opt(k.bessel.map(|b| b.b)),
                    fmt_num(k.x),
                    fmt_num(k.closed),
                    fmt_num(k.numeric),
                    fmt_num(k.abs_err()),
                    verdict(k.passes()),
                ]
            })
        });
        let header = [
            "kind",
            "eta",
            "alpha",
            "a",
            "rho",
            "c",
            "p",
            "b",
            "x",
            "closed",
            "quadrature",
            "abs_err",
            "result",
        ];
        emit(Some(path), &csv(&header, rows))?;
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn kinetics(c: &KineticsConfig) -> Result<bool> {
    let p = &c.params;
    let law: &dyn Fn(f64) -> pathent::Result<f64> = match c.law {
        Law::Exp => &|t| exponential_decay(p.n0, p.c, t),
        Law::Ml => &|t| ml_decay(p.n0, p.c, p.nu, t),
        Law::Pathway => &|t| unconditional_density(p, t),
        Law::MixtureCheck => return mixture(c),
    };
    let rows =
        c.t.iter()
            .map(|&t| Ok(vec![fmt_num(t), fmt_num(law(t)?)]))
            .collect::<pathent::Result<Vec<_>>>()?;
    emit(c.output.as_ref(), &csv(&["t", "N"], rows))?;
    Ok(true)
}

fn mixture(c: &KineticsConfig) -> Result<bool> {
    let report = mixture_check(&default_mixture_grid(), c.index)?;
    let verdict = if report.pass { "PASS" } else { "FAIL" };
    let row = vec![
        report.points.len().to_string(),
        fmt_num(report.max_deviation),
        fmt_num(MIXTURE_GATE),
        verdict.to_string(),
    ];
    emit(
        c.output.as_ref(),
        &csv(&["points", "max_deviation", "gate", "result"], [row]),
    )?;
    if let Some(path) = &c.points_output {
        let rows = report.points.iter().map(|m| {
            vec![
                fmt_num(m.t),
                fmt_num(m.params.mu),
                fmt_num(m.params.nu),
                fmt_num(m.params.alpha_k),
                fmt_num(m.mixture),
                fmt_num(m.closed),
                fmt_num(m.deviation()),
            ]
        });
        emit(
            Some(path),
            &csv(&["t", "mu", "nu", "alpha", "mixture", "closed", "deviation"], rows),
        )?;
    }
    Ok(report.pass)
}

/// Geometric grid of `n` points on `[lo, hi]`.
pub fn geometric(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Brownian density `(πt)^{−1/2} e^{−x²/t}` tabulated as `(x, f)` rows.
#[cfg(test)]
fn brownian_table(t: f64, half_width: f64, cells: usize) -> String {
    let dx = 2.0 * half_width / cells as f64;
    use std::f64::consts::PI;
    let mut out = String::from("x,f\n");
    for i in 0..cells {
        let x = -half_width + (i as f64 + 0.5) * dx;
        out.push_str(&format!("{x},{}\n", (-x * x / t).exp() / (PI * t).sqrt()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pathent::entropy::ContinuousKind;

    #[test]
    fn pdf_reader_recovers_closed_form() {
        let pdf = read_pdf(&brownian_table(1.0, 12.0, 24_000), "g").unwrap();
        let got = continuous_entropy(ContinuousKind::Mathai, 1.2, &pdf).unwrap();
        let want = gaussian_entropy_closed(ContinuousKind::Mathai, 1.2, 1.0).unwrap();
        assert!((got - want).abs() < 1e-8, "{got} vs {want}");
    }

    #[test]
    fn pdf_reader_rejects_uneven_grid() {
        let e = read_pdf("x,f\n0,0.5\n1,0.5\n2.5,0\n", "u").unwrap_err();
        assert!(e.to_string().starts_with("u:4:"), "{e}");
    }

    #[test]
    fn geometric_endpoints() {
        let g = geometric(1.0, 1000.0, 4);
        assert_eq!(g.len(), 4);
        assert!((g[1] - 10.0).abs() < 1e-12 && (g[3] - 1000.0).abs() < 1e-9);
    }
}
