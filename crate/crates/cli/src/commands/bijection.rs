use crate::output::{emit, Format};
use anyhow::{bail, Context, Result};
use pascalian::combinatorics::{
    enumerate_tableaux_with_cap, phi, shape_of, walk_height, DEFAULT_ENUMERATION_CAP,
};
use serde_json::json;
use std::collections::HashSet;
use std::fmt::Write;
use std::path::PathBuf;

fn cap_from_env() -> Result<u32> {
    match std::env::var("PASCALIAN_CAP") {
        Ok(raw) => raw
            .parse::<u32>()
            .with_context(|| format!("PASCALIAN_CAP must be a nonnegative integer, got {raw:?}")),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

struct Row {
    subset: Vec<u32>,
    shape: (u32, u32),
    walk: String,
    height: u32,
    ok: bool,
}

pub fn run(n: u32, format: Option<Format>, out: Option<&PathBuf>) -> Result<bool> {
    let format = format.unwrap_or(Format::Text);
    let cap = cap_from_env()?;
    let tableaux = enumerate_tableaux_with_cap(n, cap)?;

    let mut rows = Vec::with_capacity(tableaux.len());
    let mut images = HashSet::new();
    let mut all_ok = true;
    for t in &tableaux {
        let w = phi(t);
        let (l1, l2) = shape_of(t);
        let height = walk_height(&w);
        // statistics 1-3 of the bijection
        let ok = w.ups() == t.subset().len()
            && (l1 == l2) == (height == 0)
            && l1 - l2 == 2 * height;
        all_ok &= ok;
        images.insert(w.steps().to_vec());
        rows.push(Row {
            subset: t.subset().to_vec(),
            shape: (l1, l2),
            walk: w.to_string(),
            height,
            ok,
        });
    }
    let bijective = images.len() == tableaux.len();
    let pass = all_ok && bijective;
    let verdict = if pass { "PASS" } else { "FAIL" };

    let content = match format {
        Format::Text => {
            let mut text = String::from("subset\tshape\twalk\theight\tchecks\n");
            for r in &rows {
                let subset = format_subset(&r.subset, ",");
                writeln!(
                    text,
                    "{{{subset}}}\t({},{})\t{}\t{}\t{}",
                    r.shape.0,
                    r.shape.1,
                    r.walk,
                    r.height,
                    if r.ok { "ok" } else { "FAIL" }
                )?;
            }
            writeln!(
                text,
                "bijection n={n}: {verdict} ({} tableaux, {} distinct walks)",
                rows.len(),
                images.len()
            )?;
            text
        }
        Format::Csv => {
            let mut csv = String::from("subset,shape1,shape2,walk,height,ok\n");
            for r in &rows {
                writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    format_subset(&r.subset, ";"),
                    r.shape.0,
                    r.shape.1,
                    r.walk,
                    r.height,
                    r.ok
                )?;
            }
            csv
        }
        Format::Json => {
            let json_rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "subset": r.subset,
                        "shape": [r.shape.0, r.shape.1],
                        "walk": r.walk,
                        "height": r.height,
                        "ok": r.ok,
                    })
                })
                .collect();
            let payload = json!({
                "meta": super::meta("bijection", &pascalian::roots::SolverConfig::default()),
                "n": n,
                "rows": json_rows,
                "bijective": bijective,
                "pass": pass,
            });
            format!("{payload:#}\n")
        }
        Format::Svg => bail!("bijection has no svg output"),
    };
    emit(out, &content)?;
    Ok(pass)
}

fn format_subset(labels: &[u32], separator: &str) -> String {
    labels
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(separator)
}
