//! Output plumbing: formats, float formatting, file-or-stdout emission, and
//! a small SVG builder. Everything here is deterministic — identical
//! invocations produce byte-identical output.

use anyhow::{Context, Result};
use clap::ValueEnum;
use num_complex::Complex64;
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Svg,
}

/// Floats in CSV output carry 15 significant digits with a '.' decimal
/// separator.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.14e}")
    }
}

/// Writes `content` to `out` when given, otherwise to stdout.
pub fn emit(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .context("writing to stdout")
        }
    }
}

/// Fixed 800x800 viewport covering the square [-1.25, 1.25]^2 of the complex
/// plane, y axis pointing up. Styles are inline; nothing references external
/// assets and no volatile fields (timestamps, ids) are emitted.
pub struct SvgPlot {
    body: String,
}

const VIEW: f64 = 800.0;
const HALF_RANGE: f64 = 1.25;

fn px(re: f64) -> f64 {
    (re + HALF_RANGE) * (VIEW / (2.0 * HALF_RANGE))
}

fn py(im: f64) -> f64 {
    (HALF_RANGE - im) * (VIEW / (2.0 * HALF_RANGE))
}

impl SvgPlot {
    pub fn new() -> Self {
        let mut body = String::new();
        body.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{VIEW}\" height=\"{VIEW}\" \
             viewBox=\"0 0 {VIEW} {VIEW}\">\n"
        ));
        body.push_str(&format!(
            "<rect width=\"{VIEW}\" height=\"{VIEW}\" fill=\"#ffffff\"/>\n"
        ));
        SvgPlot { body }
    }

    /// Circle of the given radius centred at the origin of the plane.
    pub fn reference_circle(&mut self, radius: f64, color: &str, dashed: bool) {
        let dash = if dashed {
            " stroke-dasharray=\"6 4\""
        } else {
            ""
        };
        self.body.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\" fill=\"none\" stroke=\"{color}\" \
             stroke-width=\"1\"{dash}/>\n",
            px(0.0),
            py(0.0),
            radius * (VIEW / (2.0 * HALF_RANGE)),
        ));
    }

    pub fn dot(&mut self, z: Complex64, radius_px: f64, color: &str) {
        self.body.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{radius_px}\" fill=\"{color}\"/>\n",
            px(z.re),
            py(z.im)
        ));
    }

    pub fn hollow_dot(&mut self, z: Complex64, radius_px: f64, color: &str) {
        self.body.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{radius_px}\" fill=\"none\" \
             stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
            px(z.re),
            py(z.im)
        ));
    }

    /// Closed polyline through the points, in order.
    pub fn closed_path(&mut self, points: &[Complex64], color: &str) {
        if points.is_empty() {
            return;
        }
        let mut d = String::new();
        for (i, z) in points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{cmd}{:.2} {:.2} ", px(z.re), py(z.im)));
        }
        d.push('Z');
        self.body.push_str(&format!(
            "<path d=\"{d}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n"
        ));
    }

    pub fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}
