use crate::output::{emit, fmt_f64, Format, SvgPlot};
use anyhow::{bail, Result};
use pascalian::roots::{classify_with, solve_roots_with, RootClass, SolverConfig};
use serde_json::json;
use std::fmt::Write;
use std::path::PathBuf;

fn class_color(class: RootClass) -> &'static str {
    match class {
        RootClass::Trivial => "#d62728",
        RootClass::Real => "#2ca02c",
        RootClass::Imaginary => "#9467bd",
        RootClass::Generic => "#1f77b4",
    }
}

pub fn run(n: u32, cfg: &SolverConfig, format: Option<Format>, out: Option<&PathBuf>) -> Result<bool> {
    let format = format.unwrap_or(Format::Csv);
    let rs = solve_roots_with(n, cfg)?;
    let classes = classify_with(&rs, cfg.imag_tol);

    let content = match format {
        Format::Csv => {
            let mut csv = String::from("n,index,re,im,norm,residual,class\n");
            for (i, (&z, class)) in rs.roots().iter().zip(&classes).enumerate() {
                writeln!(
                    csv,
                    "{n},{i},{},{},{},{},{class}",
                    fmt_f64(z.re),
                    fmt_f64(z.im),
                    fmt_f64(z.norm()),
                    fmt_f64(rs.residuals()[i]),
                )?;
            }
            csv
        }
        Format::Json => {
            let json_roots: Vec<_> = rs
                .roots()
                .iter()
                .zip(&classes)
                .enumerate()
                .map(|(i, (&z, class))| {
                    json!({
                        "n": n,
                        "index": i,
                        "re": z.re,
                        "im": z.im,
                        "norm": z.norm(),
                        "residual": rs.residuals()[i],
                        "class": class.to_string(),
                    })
                })
                .collect();
            let payload = json!({
                "meta": super::meta("roots", cfg),
                "n": n,
                "iterations": rs.iterations(),
                "roots": json_roots,
            });
            format!("{payload:#}\n")
        }
        Format::Svg => {
            let mut plot = SvgPlot::new();
            plot.reference_circle(1.0, "#999999", false);
            plot.reference_circle(2.0f64.sqrt() - 1.0, "#999999", true);
            for (&z, &class) in rs.roots().iter().zip(&classes) {
                plot.dot(z, 3.0, class_color(class));
            }
            plot.finish()
        }
        Format::Text => bail!("roots supports csv, json, or svg output"),
    };
    emit(out, &content)?;
    Ok(true)
}
