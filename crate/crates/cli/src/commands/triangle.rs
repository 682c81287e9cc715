use crate::output::{emit, Format};
use anyhow::{bail, Result};
use num_bigint::BigInt;
use pascalian::combinatorics::triangle_row;
use serde_json::json;
use std::fmt::Write;
use std::path::PathBuf;

pub fn run(n_max: u32, sums: bool, format: Option<Format>, out: Option<&PathBuf>) -> Result<bool> {
    let format = format.unwrap_or(Format::Text);
    let rows: Vec<Vec<BigInt>> = (0..=n_max).map(triangle_row).collect();
    let content = match format {
        Format::Text => {
            let mut text = String::new();
            for (n, row) in rows.iter().enumerate() {
                let values = row
                    .iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>()
                    .join(" ");
                if sums {
                    let sum: BigInt = row.iter().sum();
                    writeln!(text, "{n}: {values} (sum {sum})")?;
                } else {
                    writeln!(text, "{n}: {values}")?;
                }
            }
            text
        }
        Format::Csv => {
            let mut csv = String::from("n,k,value\n");
            for (n, row) in rows.iter().enumerate() {
                for (k, value) in row.iter().enumerate() {
                    writeln!(csv, "{n},{k},{value}")?;
                }
            }
            csv
        }
        Format::Json => {
            let json_rows: Vec<_> = rows
                .iter()
                .enumerate()
                .map(|(n, row)| {
                    let sum: BigInt = row.iter().sum();
                    json!({
                        "n": n,
                        "values": row.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                        "sum": sum.to_string(),
                    })
                })
                .collect();
            let payload = json!({
                "meta": super::meta("triangle", &pascalian::roots::SolverConfig::default()),
                "rows": json_rows,
            });
            format!("{payload:#}\n")
        }
        Format::Svg => bail!("triangle has no svg output"),
    };
    emit(out, &content)?;
    Ok(true)
}
