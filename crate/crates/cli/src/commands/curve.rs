use crate::output::{emit, fmt_f64, Format, SvgPlot};
use anyhow::{bail, Result};
use num_complex::Complex64;
use pascalian::curve::{
    approximants, boundary_point, convergence_metrics, gamma_n_boundary, no_roots_in_gamma,
    ConvergenceReport, CurveSpec,
};
use pascalian::roots::{solve_roots_with, SolverConfig};
use serde_json::json;
use std::f64::consts::PI;
use std::fmt::Write;
use std::path::PathBuf;

fn limit_boundary(samples: usize) -> Vec<Complex64> {
    (0..samples)
        .map(|j| boundary_point(2.0 * PI * j as f64 / samples as f64))
        .collect()
}

pub fn run(
    n: u32,
    metrics: bool,
    samples: usize,
    cfg: &SolverConfig,
    format: Option<Format>,
    out: Option<&PathBuf>,
) -> Result<bool> {
    let format = format.unwrap_or(Format::Csv);
    let spec = CurveSpec::finite(n)?;
    let k_n = spec.k_value();
    let rs = solve_roots_with(n, cfg)?;
    let boundary_n = gamma_n_boundary(n, samples)?;
    let boundary_lim = limit_boundary(samples);
    let zm = approximants(n);
    let gamma = no_roots_in_gamma(&rs)?;
    let report: Option<ConvergenceReport> = if metrics {
        Some(convergence_metrics(&rs)?)
    } else {
        None
    };
    let pass = gamma.violations.is_empty() && gamma.min_margin > -1e-9;

    // human summary alongside the data stream
    eprintln!("k_n = {k_n}");
    eprintln!("min_margin = {:e}", gamma.min_margin);
    if let Some(m) = &report {
        eprintln!("hausdorff_to_curve = {:e}", m.hausdorff_to_curve);
        eprintln!("max_match_to_zm = {:e}", m.max_match_to_zm);
        eprintln!("fill_gap = {:e}", m.fill_gap);
    }

    let content = match format {
        Format::Csv => {
            let mut csv = String::from("kind,label,re,im\n");
            writeln!(csv, "metric,k_n,{},", fmt_f64(k_n))?;
            writeln!(csv, "metric,min_margin,{},", fmt_f64(gamma.min_margin))?;
            if let Some(m) = &report {
                writeln!(csv, "metric,hausdorff_to_curve,{},", fmt_f64(m.hausdorff_to_curve))?;
                writeln!(csv, "metric,max_match_to_zm,{},", fmt_f64(m.max_match_to_zm))?;
                writeln!(csv, "metric,fill_gap,{},", fmt_f64(m.fill_gap))?;
            }
            for (j, z) in boundary_n.iter().enumerate() {
                writeln!(csv, "boundary_n,{j},{},{}", fmt_f64(z.re), fmt_f64(z.im))?;
            }
            for (j, z) in boundary_lim.iter().enumerate() {
                writeln!(csv, "boundary_limit,{j},{},{}", fmt_f64(z.re), fmt_f64(z.im))?;
            }
            for (idx, z) in zm.points.iter().enumerate() {
                writeln!(csv, "approximant,{},{},{}", idx + 1, fmt_f64(z.re), fmt_f64(z.im))?;
            }
            for (j, z) in rs.roots().iter().enumerate() {
                writeln!(csv, "root,{j},{},{}", fmt_f64(z.re), fmt_f64(z.im))?;
            }
            csv
        }
        Format::Json => {
            let pts = |v: &[Complex64]| {
                v.iter()
                    .map(|z| json!({ "re": z.re, "im": z.im }))
                    .collect::<Vec<_>>()
            };
            let payload = json!({
                "meta": super::meta("curve", cfg),
                "n": n,
                "k_n": k_n,
                "min_margin": gamma.min_margin,
                "boundary_n": pts(&boundary_n),
                "boundary_limit": pts(&boundary_lim),
                "approximants": pts(&zm.points),
                "roots": pts(rs.roots()),
                "metrics": report.as_ref().map(|m| json!({
                    "hausdorff_to_curve": m.hausdorff_to_curve,
                    "max_match_to_zm": m.max_match_to_zm,
                    "fill_gap": m.fill_gap,
                })),
                "pass": pass,
            });
            format!("{payload:#}\n")
        }
        Format::Svg => {
            let mut plot = SvgPlot::new();
            plot.reference_circle(1.0, "#cccccc", false);
            plot.closed_path(&boundary_lim, "#d4af37");
            plot.closed_path(&boundary_n, "#ff7f0e");
            for &z in &zm.points {
                plot.hollow_dot(z, 4.0, "#e377c2");
            }
            for &z in rs.roots() {
                plot.dot(z, 3.0, "#1f77b4");
            }
            plot.finish()
        }
        Format::Text => bail!("curve supports csv, json, or svg output"),
    };
    emit(out, &content)?;
    Ok(pass)
}
