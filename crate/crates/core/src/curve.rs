//! The root-free regions `Γ_n`, their thresholds `K_n`, the limit curve
//! `∂Γ`, the approximants `z_m`, and convergence metrics from computed root
//! sets to the curve.
//!
//! `Γ_n = { z : |z| / (|1+z|^{1/n}·|1+z²|) ≤ K_n, |z| ≤ 1 }` with
//! `K_n = (n²−1)/(2n²)`. The limit region `Γ` is the intersection of the two
//! closed disks of radius √2 centred at `±i`; its boundary is parameterised
//! by the small solution of `w·z² − 2z + w = 0` as `w` walks the unit circle.

use crate::error::{Error, Result};
use crate::exec;
use crate::roots::RootSet;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Number of boundary samples used by the distance metrics.
pub const BOUNDARY_SAMPLES: usize = 4096;

/// Slack allowed on the `K_n` comparison when testing that roots avoid `Γ_n`.
pub const GAMMA_MARGIN_TOL: f64 = 1e-9;

/// Selects either the region `Γ_n` for a finite `n ≥ 2` or the limit region
/// `Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveSpec {
    Finite(u32),
    Limit,
}

impl CurveSpec {
    /// A finite-`n` spec; errors for `n < 2` where `K_n` is undefined.
    pub fn finite(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "curve spec requires n >= 2, got {n}"
            )));
        }
        Ok(CurveSpec::Finite(n))
    }

    /// The threshold `K_n = (n²−1)/(2n²)`, or `1/2` in the limit.
    pub fn k_value(&self) -> f64 {
        match *self {
            CurveSpec::Finite(n) => {
                let n = f64::from(n);
                (n * n - 1.0) / (2.0 * n * n)
            }
            CurveSpec::Limit => 0.5,
        }
    }
}

/// `|z| / (|1+z|^{1/n}·|1+z²|)`, or `|z|/|1+z²|` in the limit. Returns
/// `+∞` when the denominator vanishes with a nonzero numerator, so `z = −1`
/// sits outside every finite `Γ_n`.
pub fn gamma_value(z: Complex64, spec: CurveSpec) -> f64 {
    let num = z.norm();
    let den = match spec {
        CurveSpec::Limit => (1.0 + z * z).norm(),
        CurveSpec::Finite(n) => {
            (1.0 + z).norm().powf(1.0 / f64::from(n)) * (1.0 + z * z).norm()
        }
    };
    if den == 0.0 {
        if num > 0.0 {
            f64::INFINITY
        } else {
            0.0
        }
    } else {
        num / den
    }
}

/// Membership in `Γ_n` (or `Γ`): the gamma value is at most `K` and
/// `|z| ≤ 1`.
pub fn in_gamma(z: Complex64, spec: CurveSpec) -> bool {
    gamma_value(z, spec) <= spec.k_value() && z.norm() <= 1.0
}

/// The disk description of the limit region: `|z−i| ≤ √2` and `|z+i| ≤ √2`.
/// Agrees with `in_gamma(z, Limit)` away from the boundary.
pub fn limit_region_check(z: Complex64) -> bool {
    let r = 2.0f64.sqrt();
    let i = Complex64::new(0.0, 1.0);
    (z - i).norm() <= r && (z + i).norm() <= r
}

/// The point of `∂Γ` at parameter `θ`: the `|z| ≤ 1` solution of
/// `w·z² − 2z + w = 0` with `w = e^{iθ}`. The two solutions multiply to 1,
/// so the small one is `w / (1 + √(1−w²))`, which stays stable where the
/// roots collide at `θ = 0` and `θ = π`.
pub fn boundary_point(theta: f64) -> Complex64 {
    let w = Complex64::from_polar(1.0, theta);
    let s = (Complex64::new(1.0, 0.0) - w * w).sqrt();
    w / (Complex64::new(1.0, 0.0) + s)
}

/// The approximants `z_m = boundary_point(2πm/n)` for `m = 1..=n`; the roots
/// of the degree-`n` polynomial settle onto these points as `n` grows.
#[derive(Debug, Clone)]
pub struct Approximants {
    pub n: u32,
    pub points: Vec<Complex64>,
}

pub fn approximants(n: u32) -> Approximants {
    assert!(n >= 1, "approximants requires n >= 1");
    let points = (1..=n)
        .map(|m| boundary_point(2.0 * PI * f64::from(m) / f64::from(n)))
        .collect();
    Approximants { n, points }
}

fn limit_samples() -> &'static [Complex64] {
    static SAMPLES: OnceLock<Vec<Complex64>> = OnceLock::new();
    SAMPLES.get_or_init(|| {
        (0..BOUNDARY_SAMPLES)
            .map(|j| boundary_point(2.0 * PI * j as f64 / BOUNDARY_SAMPLES as f64))
            .collect()
    })
}

/// Distance from `z` to the limit curve `∂Γ`: a coarse minimum over
/// [`BOUNDARY_SAMPLES`] samples, then golden-section refinement of the curve
/// parameter around the best sample.
pub fn distance_to_limit_curve(z: Complex64) -> f64 {
    let samples = limit_samples();
    let mut best_j = 0;
    let mut best = f64::INFINITY;
    for (j, p) in samples.iter().enumerate() {
        let d = (z - p).norm();
        if d < best {
            best = d;
            best_j = j;
        }
    }
    let spacing = 2.0 * PI / BOUNDARY_SAMPLES as f64;
    let theta = best_j as f64 * spacing;
    golden_min(|t| (z - boundary_point(t)).norm(), theta - spacing, theta + spacing).min(best)
}

/// Golden-section search for the minimum of `f` on `[a, b]`.
fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - (b - a) * INV_PHI;
    let mut d = a + (b - a) * INV_PHI;
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..80 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * INV_PHI;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * INV_PHI;
            fd = f(d);
        }
    }
    fc.min(fd)
}

/// Report for the `Γ_n` avoidance check.
#[derive(Debug, Clone)]
pub struct GammaReport {
    /// Smallest `gamma_value − K_n` over roots with `|z| ≤ 1`; positive means
    /// every root clears the region.
    pub min_margin: f64,
    /// Roots found inside `Γ_n` beyond [`GAMMA_MARGIN_TOL`].
    pub violations: Vec<Complex64>,
}

/// Verifies that no root of the set lies in `Γ_n`.
pub fn no_roots_in_gamma(rs: &RootSet) -> Result<GammaReport> {
    let spec = CurveSpec::finite(rs.n())?;
    let k = spec.k_value();
    let mut min_margin = f64::INFINITY;
    let mut violations = Vec::new();
    for &z in rs.roots() {
        if z.norm() <= 1.0 {
            let margin = gamma_value(z, spec) - k;
            min_margin = min_margin.min(margin);
            if margin < -GAMMA_MARGIN_TOL {
                violations.push(z);
            }
        }
    }
    Ok(GammaReport {
        min_margin,
        violations,
    })
}

/// Convergence metrics from a root set to the limit curve.
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceReport {
    /// Largest distance from a nontrivial root to `∂Γ`.
    pub hausdorff_to_curve: f64,
    /// Largest distance from a root to its nearest approximant `z_m` — how
    /// far any root strays from the predicted positions.
    pub max_match_to_zm: f64,
    /// Largest distance from a boundary sample to its nearest root — how
    /// evenly the roots cover the curve.
    pub fill_gap: f64,
}

/// Computes the three convergence metrics for a solved root set (`n ≥ 3`).
pub fn convergence_metrics(rs: &RootSet) -> Result<ConvergenceReport> {
    if rs.n() < 3 {
        return Err(Error::Domain(format!(
            "convergence metrics require n >= 3, got {}",
            rs.n()
        )));
    }
    let nontrivial: Vec<Complex64> = rs.nontrivial_roots().collect();
    let distances = exec::map_indexed(nontrivial.len(), |i| {
        distance_to_limit_curve(nontrivial[i])
    });
    let hausdorff_to_curve = distances.into_iter().fold(0.0f64, f64::max);

    let targets = approximants(rs.n()).points;
    let max_match_to_zm = nearest_match_max(rs.roots(), &targets);

    let samples = limit_samples();
    let roots = rs.roots();
    let gaps = exec::map_indexed(samples.len(), |j| {
        roots
            .iter()
            .map(|&z| (samples[j] - z).norm())
            .fold(f64::INFINITY, f64::min)
    });
    let fill_gap = gaps.into_iter().fold(0.0f64, f64::max);

    Ok(ConvergenceReport {
        hausdorff_to_curve,
        max_match_to_zm,
        fill_gap,
    })
}

/// Worst-case distance from any root to its nearest target point. A forced
/// one-to-one matching is the wrong tool here: the approximant at `θ = 2π`
/// (that is, `z = 1`) never has a root partner, and for odd `n` neither does
/// the trivial root, so a perfect matching always ends with one cross-region
/// pair of diameter size. Nearest-distance per root is the quantity the
/// convergence statement controls.
fn nearest_match_max(roots: &[Complex64], targets: &[Complex64]) -> f64 {
    roots
        .iter()
        .map(|&r| {
            targets
                .iter()
                .map(|&t| (r - t).norm())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0f64, f64::max)
}

/// Samples the outer boundary of `Γ_n` along rays from the origin: for each
/// angle the largest radius (capped at 1) still inside the region, located by
/// a descending scan and bisection.
pub fn gamma_n_boundary(n: u32, samples: usize) -> Result<Vec<Complex64>> {
    let spec = CurveSpec::finite(n)?;
    Ok(exec::map_indexed(samples, |idx| {
        let alpha = 2.0 * PI * idx as f64 / samples as f64;
        let dir = Complex64::from_polar(1.0, alpha);
        if in_gamma(dir, spec) {
            return dir;
        }
        const STEPS: usize = 512;
        let mut inside = 0.0f64;
        let mut outside = 1.0f64;
        for s in (0..STEPS).rev() {
            let r = s as f64 / STEPS as f64;
            if in_gamma(dir * r, spec) {
                inside = r;
                outside = (s + 1) as f64 / STEPS as f64;
                break;
            }
        }
        for _ in 0..60 {
            let mid = 0.5 * (inside + outside);
            if in_gamma(dir * mid, spec) {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        dir * inside
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2_M1: f64 = 0.414_213_562_373_095_1; // √2 − 1

    #[test]
    fn k_values() {
        assert_eq!(CurveSpec::finite(2).unwrap().k_value(), 0.375);
        assert_eq!(CurveSpec::Limit.k_value(), 0.5);
        assert!(CurveSpec::finite(1).is_err());
        for n in 3..=200 {
            let k = CurveSpec::finite(n).unwrap().k_value();
            let prev = CurveSpec::finite(n - 1).unwrap().k_value();
            assert!(prev < k && k < 0.5, "K_n must increase toward 1/2");
        }
    }

    #[test]
    fn gamma_value_examples() {
        let spec2 = CurveSpec::finite(2).unwrap();
        let v = gamma_value(Complex64::new(1.0, 0.0), spec2);
        assert!((v - 0.5f64.powf(1.5)).abs() < 1e-15); // 1/2^{3/2}
        assert_eq!(gamma_value(Complex64::new(0.0, 0.0), spec2), 0.0);
        assert!(gamma_value(Complex64::new(-1.0, 0.0), spec2).is_infinite());
    }

    #[test]
    fn in_gamma_examples() {
        let spec2 = CurveSpec::finite(2).unwrap();
        assert!(in_gamma(Complex64::new(1.0, 0.0), spec2));
        assert!(!in_gamma(Complex64::new(0.0, 0.9), CurveSpec::Limit));
        assert!(in_gamma(Complex64::new(0.0, 0.0), spec2));
    }

    #[test]
    fn limit_region_examples() {
        assert!(limit_region_check(Complex64::new(0.0, 0.0)));
        assert!(limit_region_check(Complex64::new(1.0, 0.0)));
        assert!(!limit_region_check(Complex64::new(1.1, 0.0)));
        // −1 lies on the limit region's boundary but outside every Γ_n
        assert!(limit_region_check(Complex64::new(-1.0, 0.0)));
        assert!(!in_gamma(
            Complex64::new(-1.0, 0.0),
            CurveSpec::finite(50).unwrap()
        ));
    }

    #[test]
    fn boundary_point_examples() {
        let z = boundary_point(0.0);
        assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let z = boundary_point(PI / 2.0);
        assert!((z - Complex64::new(0.0, SQRT2_M1)).norm() < 1e-14);
        // θ = π is the other double root of the quadratic; position accuracy
        // degrades to O(√ε) there while the on-curve residual stays tiny
        let z = boundary_point(PI);
        assert!((z - Complex64::new(-1.0, 0.0)).norm() < 1e-7);
    }

    #[test]
    fn boundary_points_lie_on_curve() {
        for j in 0..4096 {
            let theta = 2.0 * PI * j as f64 / 4096.0;
            let z = boundary_point(theta);
            assert!(z.norm() <= 1.0 + 1e-12, "theta = {theta}");
            let ratio = z.norm() / (1.0 + z * z).norm();
            assert!((ratio - 0.5).abs() < 1e-12, "theta = {theta}: {ratio}");
        }
    }

    #[test]
    fn approximant_examples() {
        let a = approximants(4);
        assert!((a.points[3] - Complex64::new(1.0, 0.0)).norm() < 1e-7);
        assert!((a.points[0] - Complex64::new(0.0, SQRT2_M1)).norm() < 1e-12);
        let a = approximants(2);
        assert!((a.points[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-7);
    }

    #[test]
    fn approximants_satisfy_defining_equation() {
        for n in [1u32, 7, 40, 128] {
            let a = approximants(n);
            assert_eq!(a.points.len(), n as usize);
            for (idx, &z) in a.points.iter().enumerate() {
                let m = idx as f64 + 1.0;
                let w = Complex64::from_polar(1.0, 2.0 * PI * m / f64::from(n));
                let image = 2.0 * z / (1.0 + z * z);
                assert!(
                    (image - w).norm() < 1e-12,
                    "n = {n}, m = {m}: residual {}",
                    (image - w).norm()
                );
                assert!(z.norm() <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn distance_to_curve_vanishes_on_curve() {
        for &theta in &[0.3, 1.2, 2.9, 4.4, 6.0] {
            let z = boundary_point(theta);
            assert!(distance_to_limit_curve(z) < 1e-9, "theta = {theta}");
        }
        // the origin is (√2 − 1) away from the nearest curve points ±i(√2−1)
        let d = distance_to_limit_curve(Complex64::new(0.0, 0.0));
        assert!((d - SQRT2_M1).abs() < 1e-6, "got {d}");
    }

    #[test]
    fn gamma_n_boundary_stays_on_level_set() {
        let pts = gamma_n_boundary(14, 64).unwrap();
        let spec = CurveSpec::finite(14).unwrap();
        let k = spec.k_value();
        for z in pts {
            assert!(z.norm() <= 1.0 + 1e-12);
            if z.norm() < 1.0 - 1e-9 {
                assert!((gamma_value(z, spec) - k).abs() < 1e-6, "z = {z}");
            }
        }
    }
}
