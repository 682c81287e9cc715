//! Numerical root finding for the Pascalian polynomials and the reports
//! built on the computed root sets.
//!
//! The solver is an Aberth–Ehrlich simultaneous iteration in double
//! precision. For odd `n` the known root at `−1` is removed exactly first —
//! the remaining factor is `q_n(z²)` — and re-appended afterwards; the
//! deflation is done implicitly through the logarithmic derivative, so no
//! deflated coefficient vector is ever formed. Seeds come from the curve
//! approximants `z_m`, which the roots are known to approach, so convergence
//! is fast and fully deterministic.
//!
//! Evaluation detail that matters: near `±i(√2−1)` the monomial form of
//! `P_n` is numerically flat — the value sinks below the round-off of the
//! coefficient scale `Σ|c_k||z|^k` over a whole neighbourhood, so Horner on
//! the coefficients cannot place those roots to better than ~1e−2 once `n`
//! reaches the hundreds. The iteration therefore evaluates through the exact
//! decomposition `P_n(z) = (1+z)(1+z²)^n − z^{n+1}·R_n(z)`, whose factors
//! carry only relative error; the lone cancellation is the final
//! subtraction, which is precisely the quantity a root needs. This keeps
//! every root accurate to ~1e−13 across the full supported range.

use crate::combinatorics::pasc;
use crate::curve;
use crate::error::{Error, Result};
use crate::exec;
use crate::polynomials::{p_poly, r_poly};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::f64::consts::PI;

/// Largest supported index: `C(512, 256)` still fits comfortably in a double.
pub const MAX_DEGREE: u32 = 512;

/// Tolerances and iteration limits for the solver and its reports.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Acceptable scaled residual `|P_n(z)| / Σ|c_k||z|^k` per root.
    pub residual_tol: f64,
    /// Threshold on `|im|` (resp. `|re|`) for calling a root real (resp.
    /// purely imaginary).
    pub imag_tol: f64,
    /// Vieta tolerances: `factor·n` for the root sum, `factor` for the
    /// product.
    pub vieta_tol_factor: f64,
    /// Slack on the annulus bounds `√2−1 < |z| < 1`.
    pub annulus_tol: f64,
    pub max_iterations: u32,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            residual_tol: 1e-10,
            imag_tol: 1e-8,
            vieta_tol_factor: 1e-6,
            annulus_tol: 1e-9,
            max_iterations: 200,
        }
    }
}

/// All complex roots of `P_n`, sorted by real then imaginary part, together
/// with their scaled residuals.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    n: u32,
    roots: Vec<Complex64>,
    residuals: Vec<f64>,
    trivial_index: Option<usize>,
    iterations: u32,
}

impl RootSet {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    /// Scaled residuals `|P_n(z)| / Σ|c_k||z|^k`, aligned with `roots`.
    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    /// Index of the exactly-deflated root at `−1` (odd `n` only).
    pub fn trivial_index(&self) -> Option<usize> {
        self.trivial_index
    }

    /// Solver sweeps used.
    pub fn iterations(&self) -> u32 {
        self.iterations
    }

    /// Roots excluding the trivial one.
    pub fn nontrivial_roots(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.roots
            .iter()
            .enumerate()
            .filter(move |(i, _)| Some(*i) != self.trivial_index)
            .map(|(_, &z)| z)
    }

    pub fn worst_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Classification of a single root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    Trivial,
    Real,
    Imaginary,
    Generic,
}

impl std::fmt::Display for RootClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RootClass::Trivial => "trivial",
            RootClass::Real => "real",
            RootClass::Imaginary => "imaginary",
            RootClass::Generic => "generic",
        };
        write!(f, "{s}")
    }
}

/// Solves `P_n` with the default configuration.
pub fn solve_roots(n: u32) -> Result<RootSet> {
    solve_roots_with(n, &SolverConfig::default())
}

/// Solves several indices at once; parallel across `n` under the `parallel`
/// feature.
pub fn solve_batch(ns: &[u32]) -> Result<Vec<RootSet>> {
    exec::try_map_indexed(ns.len(), |i| solve_roots(ns[i]))
}

/// Solves `P_n` for `1 ≤ n ≤ 512`.
///
/// Odd `n`: the trivial root is deflated exactly and the iteration runs on
/// `q_n(z²)`; even `n`: the iteration runs on `P_n` directly. Coefficients
/// are normalised by the leading coefficient in double precision. Errors
/// with [`Error::NoConvergence`] if any scaled residual stays at or above
/// `residual_tol` after `max_iterations` sweeps.
pub fn solve_roots_with(n: u32, cfg: &SolverConfig) -> Result<RootSet> {
    if n < 1 || n > MAX_DEGREE {
        return Err(Error::Domain(format!(
            "solve_roots handles 1 <= n <= {MAX_DEGREE}, got {n}"
        )));
    }
    let odd = n % 2 == 1;
    let degree = if odd { n as usize - 1 } else { n as usize };
    let eval = StructuredEval::new(n);

    let (mut roots, iterations) = if degree == 0 {
        (Vec::new(), 0)
    } else {
        aberth(&eval, odd, initial_guesses(n, degree), cfg.max_iterations)
    };
    if odd {
        roots.push(Complex64::new(-1.0, 0.0));
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let trivial_index = if odd {
        roots.iter().position(|z| z.re == -1.0 && z.im == 0.0)
    } else {
        None
    };

    let p_coeffs: Vec<f64> = p_poly(n)
        .coeffs()
        .iter()
        .map(|c| c.to_f64().expect("coefficient fits in f64"))
        .collect();
    let residuals: Vec<f64> = roots
        .iter()
        .map(|&z| scaled_residual(&p_coeffs, z))
        .collect();
    let worst = residuals.iter().copied().fold(0.0, f64::max);
    if worst >= cfg.residual_tol {
        return Err(Error::NoConvergence {
            n,
            iterations,
            worst_residual: worst,
        });
    }
    Ok(RootSet {
        n,
        roots,
        residuals,
        trivial_index,
        iterations,
    })
}

/// Evaluates `P_n` and its derivative through the cancellation-free
/// decomposition `P_n(z) = (1+z)·W^n − z^{n+1}·R_n(z)` with `W = 1+z²`.
struct StructuredEval {
    n: u32,
    /// `⟨n,k⟩` as doubles, ascending — the coefficients of `R_n`.
    r_coeffs: Vec<f64>,
}

impl StructuredEval {
    fn new(n: u32) -> Self {
        let r_coeffs = r_poly(n)
            .coeffs()
            .iter()
            .map(|c| c.to_f64().expect("coefficient fits in f64"))
            .collect();
        StructuredEval { n, r_coeffs }
    }

    /// `(P_n(z), P_n'(z))`, jointly rescaled so both parts stay in a range
    /// where complex division cannot overflow — the values reach ~1e156 for
    /// n = 512, which breaks `norm_sqr`-based division if left raw. Only the
    /// ratio and the vanishing of the value matter to the iteration.
    fn eval_pd(&self, z: Complex64) -> (Complex64, Complex64) {
        let n = self.n;
        // R_n and R_n' by joint Horner
        let mut r = Complex64::new(0.0, 0.0);
        let mut dr = Complex64::new(0.0, 0.0);
        for &c in self.r_coeffs.iter().rev() {
            dr = dr * z + r;
            r = r * z + c;
        }
        let w = 1.0 + z * z;
        let w_pow_nm1 = w.powu(n - 1);
        let w_pow_n = w_pow_nm1 * w;
        let z_pow_n = z.powu(n);
        let a = (1.0 + z) * w_pow_n;
        let da = w_pow_nm1 * (w + 2.0 * f64::from(n) * z * (1.0 + z));
        let b = z_pow_n * z * r;
        let db = z_pow_n * ((f64::from(n) + 1.0) * r + z * dr);
        let scale = a
            .re
            .abs()
            .max(a.im.abs())
            .max(b.re.abs())
            .max(b.im.abs())
            .max(f64::MIN_POSITIVE);
        ((a - b) / scale, (da - db) / scale)
    }
}

/// Seeds for the iteration. For `n ≥ 8` the roots are known to sit near the
/// curve approximants, so those are used, each nudged off any symmetry axis;
/// below that, points on the circle `|z| = 0.7` rotated off the real axis.
fn initial_guesses(n: u32, degree: usize) -> Vec<Complex64> {
    if n >= 8 {
        let zm = curve::approximants(n).points;
        (0..degree)
            .map(|idx| zm[idx] + Complex64::from_polar(0.01, 0.7 * (idx + 1) as f64))
            .collect()
    } else {
        (0..degree)
            .map(|j| Complex64::from_polar(0.7, 2.0 * PI * j as f64 / degree as f64 + 0.4))
            .collect()
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut p = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        p = p * z + c;
    }
    p
}

/// `Σ |c_k|·r^k`, the scale used for backward-error style residuals.
fn scale_at(abs_coeffs: &[f64], r: f64) -> f64 {
    let mut s = 0.0;
    for &c in abs_coeffs.iter().rev() {
        s = s * r + c;
    }
    s
}

fn scaled_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let value = horner(coeffs, z).norm();
    let abs: Vec<f64> = coeffs.iter().map(|c| c.abs()).collect();
    let scale = scale_at(&abs, z.norm());
    if scale == 0.0 {
        value
    } else {
        value / scale
    }
}

/// Aberth–Ehrlich sweep loop. `deflate_minus_one` folds the known root at
/// `−1` into the logarithmic derivative, so the iterates chase only the
/// remaining factor. A root settles once its correction drops to the
/// round-off floor; the loop stops when all have, corrections stagnate, or
/// the iteration budget runs out. Final acceptance is judged by the caller
/// on residuals.
fn aberth(
    eval: &StructuredEval,
    deflate_minus_one: bool,
    mut z: Vec<Complex64>,
    max_iterations: u32,
) -> (Vec<Complex64>, u32) {
    let degree = z.len();
    const SETTLE: f64 = 5e-14;
    // Every root of the working factor has |z| < 1 strictly (the largest
    // norm stays below 0.97 across the supported range). Outside the unit
    // circle the (1+z)(1+z²)^n part dominates and its spurious zero at −1
    // can trap an iterate in a cycle, so keep everything strictly inside.
    const RADIUS_CAP: f64 = 0.999;
    for iteration in 1..=max_iterations {
        let mut max_step = 0.0f64;
        let mut all_settled = true;
        for i in 0..degree {
            let zi = z[i];
            let (p, dp) = eval.eval_pd(zi);
            if p.norm() == 0.0 {
                continue; // landed exactly on a root
            }
            // logarithmic derivative of the working (possibly deflated) factor
            let mut log_deriv = dp / p;
            if deflate_minus_one {
                log_deriv -= (zi + 1.0).inv();
            }
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let diff = zi - zj;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = log_deriv - repulsion;
            if denom.norm() == 0.0 || !denom.is_finite() {
                // stationary configuration; nudge deterministically
                z[i] = zi + Complex64::new(1e-8, 1e-8);
                all_settled = false;
                continue;
            }
            let step = denom.inv();
            let mut candidate = zi - step;
            if !candidate.is_finite() {
                z[i] = zi + Complex64::new(1e-8, 1e-8);
                all_settled = false;
                continue;
            }
            let r = candidate.norm();
            if r > RADIUS_CAP {
                candidate *= RADIUS_CAP / r;
            }
            z[i] = candidate;
            let size = (candidate - zi).norm();
            max_step = max_step.max(size);
            if size > SETTLE * (1.0 + zi.norm()) {
                all_settled = false;
            }
        }
        if all_settled || max_step == 0.0 {
            return (z, iteration);
        }
    }
    (z, max_iterations)
}

/// Count of roots on the real axis under the default `imag_tol`.
pub fn count_real_roots(rs: &RootSet) -> usize {
    count_real_roots_with(rs, SolverConfig::default().imag_tol)
}

pub fn count_real_roots_with(rs: &RootSet, imag_tol: f64) -> usize {
    rs.roots.iter().filter(|z| z.im.abs() < imag_tol).count()
}

/// Count of conjugate pairs on the imaginary axis under the default
/// `imag_tol`.
pub fn count_imaginary_pairs(rs: &RootSet) -> usize {
    count_imaginary_pairs_with(rs, SolverConfig::default().imag_tol)
}

pub fn count_imaginary_pairs_with(rs: &RootSet, imag_tol: f64) -> usize {
    let on_axis = rs.roots.iter().filter(|z| z.re.abs() < imag_tol).count();
    debug_assert!(on_axis % 2 == 0, "imaginary roots must pair up");
    on_axis / 2
}

/// Per-root classes in root order.
pub fn classify(rs: &RootSet) -> Vec<RootClass> {
    classify_with(rs, SolverConfig::default().imag_tol)
}

pub fn classify_with(rs: &RootSet, imag_tol: f64) -> Vec<RootClass> {
    rs.roots
        .iter()
        .enumerate()
        .map(|(i, z)| {
            if Some(i) == rs.trivial_index {
                RootClass::Trivial
            } else if z.im.abs() < imag_tol {
                RootClass::Real
            } else if z.re.abs() < imag_tol {
                RootClass::Imaginary
            } else {
                RootClass::Generic
            }
        })
        .collect()
}

/// Annulus report over the nontrivial roots.
#[derive(Debug, Clone)]
pub struct AnnulusReport {
    /// Smallest nontrivial root norm (`+∞` when there are none).
    pub min_norm: f64,
    /// Largest nontrivial root norm (`0` when there are none).
    pub max_norm: f64,
    /// Roots outside `√2−1 − tol < |z| < 1 + tol`.
    pub violations: Vec<Complex64>,
}

/// Checks the annulus bound `√2−1 < |z| < 1` on the nontrivial roots.
pub fn annulus_check(rs: &RootSet) -> AnnulusReport {
    annulus_check_with(rs, SolverConfig::default().annulus_tol)
}

pub fn annulus_check_with(rs: &RootSet, tol: f64) -> AnnulusReport {
    let inner = 2.0f64.sqrt() - 1.0;
    let mut min_norm = f64::INFINITY;
    let mut max_norm = 0.0f64;
    let mut violations = Vec::new();
    for z in rs.nontrivial_roots() {
        let r = z.norm();
        min_norm = min_norm.min(r);
        max_norm = max_norm.max(r);
        if r <= inner - tol || r >= 1.0 + tol {
            violations.push(z);
        }
    }
    AnnulusReport {
        min_norm,
        max_norm,
        violations,
    }
}

/// Vieta report: computed root sum and product against their closed forms.
#[derive(Debug, Clone)]
pub struct VietaReport {
    pub sum: Complex64,
    pub product: Complex64,
    /// `−1` for odd `n`, `2/(n+2) − 1` for even `n`.
    pub expected_sum: f64,
    /// `(−1)^n / C(n, ⌊n/2⌋)`.
    pub expected_product: f64,
    pub sum_ok: bool,
    pub product_ok: bool,
}

/// Compares the root sum and product with their exact values.
pub fn vieta_check(rs: &RootSet) -> VietaReport {
    vieta_check_with(rs, SolverConfig::default().vieta_tol_factor)
}

pub fn vieta_check_with(rs: &RootSet, tol_factor: f64) -> VietaReport {
    let n = rs.n;
    let sum: Complex64 = rs.roots.iter().sum();
    let product: Complex64 = rs
        .roots
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, &z| acc * z);
    let expected_sum = if n % 2 == 1 {
        -1.0
    } else {
        2.0 / (f64::from(n) + 2.0) - 1.0
    };
    let magnitude = 1.0 / pasc(n, 0).to_f64().expect("fits in f64");
    let expected_product = if n % 2 == 0 { magnitude } else { -magnitude };
    let sum_ok = (sum - expected_sum).norm() < tol_factor * f64::from(n);
    let product_ok = (product - expected_product).norm() < tol_factor;
    VietaReport {
        sum,
        product,
        expected_sum,
        expected_product,
        sum_ok,
        product_ok,
    }
}
