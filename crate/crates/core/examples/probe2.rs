// Scratch probe: inspect suspect roots for n = 100 and n = 63.
use num_complex::Complex64;
use pascalian::curve::{gamma_value, CurveSpec};
use pascalian::roots::solve_roots;

fn main() {
    for n in [63u32, 100, 200] {
        let rs = solve_roots(n).unwrap();
        let spec = CurveSpec::finite(n).unwrap();
        let k = spec.k_value();
        // min pairwise distance (duplicate detection)
        let roots = rs.roots();
        let mut min_pair = f64::INFINITY;
        for i in 0..roots.len() {
            for j in 0..i {
                min_pair = min_pair.min((roots[i] - roots[j]).norm());
            }
        }
        // worst margin root
        let (worst_root, worst_margin) = roots
            .iter()
            .map(|&z| (z, gamma_value(z, spec) - k))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        // closest-to-imaginary-axis root
        let near_axis = roots
            .iter()
            .copied()
            .filter(|z| z.im > 0.0)
            .min_by(|a, b| a.re.abs().total_cmp(&b.re.abs()))
            .unwrap();
        println!(
            "n={n}: count={} min_pair_dist={min_pair:.3e} worst_margin={worst_margin:.4e} at {worst_root:.6} |z|={:.6} near_axis_re={:.3e}",
            roots.len(),
            worst_root.norm(),
            near_axis.re,
        );
        let one = Complex64::new(1.0, 0.0);
        println!(
            "   gamma(1)={:.6} K_n={k:.6}  dist(worst_root, 1)={:.4}",
            gamma_value(one, spec),
            (worst_root - one).norm()
        );
    }
}
