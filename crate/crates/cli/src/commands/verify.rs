use crate::output::{emit, Format};
use anyhow::{bail, Result};
use clap::ValueEnum;
use pascalian::algebra::{factor_odd, q_square_criterion};
use pascalian::polynomials::{
    check_binomial_identity, check_extended_recursion, check_linear_decomposition,
    check_p_recursion, check_r_recursion, check_u_identity, gcd_primitive, p_poly, r_poly,
    IntPoly,
};
use pascalian::series::{gf_g_series, gf_h_series};
use serde_json::json;
use std::fmt::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Recursions,
    Gf,
    Factor,
    Gcd,
    All,
}

struct CheckResult {
    name: &'static str,
    detail: String,
    pass: bool,
}

fn check(results: &mut Vec<CheckResult>, name: &'static str, detail: String, pass: bool) {
    results.push(CheckResult { name, detail, pass });
}

/// The exact recursion and identity checks up to `n_max`. The k-fold
/// recursion is quadratic in `n`, so it stops at 40 regardless.
fn recursions(results: &mut Vec<CheckResult>, n_max: u32) {
    let mut ok = (1..=n_max).all(check_r_recursion);
    check(results, "r_recursion", format!("n<={n_max}"), ok);
    ok = (1..=n_max).all(check_p_recursion);
    check(results, "p_recursion", format!("n<={n_max}"), ok);
    ok = (0..=n_max).all(check_binomial_identity);
    check(results, "binomial_identity", format!("n<={n_max}"), ok);
    let ext_max = n_max.min(40);
    ok = (2..=ext_max)
        .all(|n| (1..n).all(|k| check_extended_recursion(n, k).unwrap_or(false)));
    check(
        results,
        "extended_recursion",
        format!("n<={ext_max} all k"),
        ok,
    );
    ok = (1..=n_max).all(check_linear_decomposition);
    check(results, "linear_decomposition", format!("n<={n_max}"), ok);
    ok = (1..=n_max / 2).all(check_u_identity);
    check(results, "u_identity", format!("m<={}", n_max / 2), ok);
}

/// Generating-function checks: series coefficients against the direct
/// constructors, plus the combined relation tying the two series together.
fn gf(results: &mut Vec<CheckResult>, n_max: u32) {
    let g = gf_g_series(n_max);
    let h = gf_h_series(n_max);
    let mut ok = (0..=n_max).all(|n| *g.coeff(n as usize) == p_poly(n));
    check(results, "gf_g_matches_p", format!("z^0..z^{n_max}"), ok);
    ok = (0..=n_max).all(|n| *h.coeff(n as usize) == r_poly(n));
    check(results, "gf_h_matches_r", format!("z^0..z^{n_max}"), ok);

    // G(x,z) + x·H(x,xz) = (1+x)/(1−z(1+x²)) coefficient-wise
    let x2_plus_1 = IntPoly::from_i64(&[1, 0, 1]);
    let mut rhs = IntPoly::from_i64(&[1, 1]);
    ok = true;
    for n in 0..=n_max as usize {
        let lhs = g.coeff(n) + &h.coeff(n).shift(n + 1);
        ok &= lhs == rhs;
        rhs = &rhs * &x2_plus_1;
    }
    check(results, "gf_combined_relation", format!("z^0..z^{n_max}"), ok);
}

fn factor(results: &mut Vec<CheckResult>, n_max: u32) {
    let mut ok = (1..=n_max)
        .step_by(2)
        .all(|n| factor_odd(n).map(|w| w.checked).unwrap_or(false));
    check(results, "factor_odd", format!("odd n<={n_max}"), ok);
    ok = (3..=n_max)
        .step_by(2)
        .all(|n| q_square_criterion(n).reducibility_excluded);
    check(
        results,
        "q_square_criterion",
        format!("odd 3<=n<={n_max}"),
        ok,
    );
}

fn gcd(results: &mut Vec<CheckResult>, n_max: u32) {
    let one = IntPoly::from_i64(&[1]);
    let one_plus_z = IntPoly::from_i64(&[1, 1]);
    let ok = (3..=n_max).all(|n| {
        let g = gcd_primitive(&p_poly(n), &p_poly(n - 2));
        if n % 2 == 1 {
            g == one_plus_z
        } else {
            g == one
        }
    });
    check(results, "gcd_consecutive_pairs", format!("3<=n<={n_max}"), ok);
}

pub fn run(suite: Suite, n_max: u32, format: Option<Format>, out: Option<&PathBuf>) -> Result<bool> {
    let format = format.unwrap_or(Format::Text);
    let mut results = Vec::new();
    match suite {
        Suite::Recursions => recursions(&mut results, n_max),
        Suite::Gf => gf(&mut results, n_max),
        Suite::Factor => factor(&mut results, n_max),
        Suite::Gcd => gcd(&mut results, n_max),
        Suite::All => {
            recursions(&mut results, n_max);
            gf(&mut results, n_max);
            factor(&mut results, n_max);
            gcd(&mut results, n_max);
        }
    }
    let pass = results.iter().all(|r| r.pass);

    let content = match format {
        Format::Text => {
            let mut text = String::new();
            for r in &results {
                writeln!(
                    text,
                    "{} ({}): {}",
                    r.name,
                    r.detail,
                    if r.pass { "PASS" } else { "FAIL" }
                )?;
            }
            writeln!(text, "verify: {}", if pass { "PASS" } else { "FAIL" })?;
            text
        }
        Format::Json => {
            let json_results: Vec<_> = results
                .iter()
                .map(|r| json!({ "check": r.name, "range": r.detail, "pass": r.pass }))
                .collect();
            let payload = json!({
                "meta": super::meta("verify", &pascalian::roots::SolverConfig::default()),
                "n_max": n_max,
                "results": json_results,
                "pass": pass,
            });
            format!("{payload:#}\n")
        }
        Format::Csv => {
            let mut csv = String::from("check,range,pass\n");
            for r in &results {
                writeln!(csv, "{},{},{}", r.name, r.detail, r.pass)?;
            }
            csv
        }
        Format::Svg => bail!("verify has no svg output"),
    };
    emit(out, &content)?;
    Ok(pass)
}
