// Scratch probe for metric magnitudes across n; not part of the test suite.
use pascalian::curve::{convergence_metrics, no_roots_in_gamma};
use pascalian::roots::{count_imaginary_pairs, count_real_roots, solve_batch};

fn main() {
    let ns: Vec<u32> = vec![25, 50, 100, 200, 256];
    let sets = solve_batch(&ns).unwrap();
    for rs in &sets {
        let m = convergence_metrics(rs).unwrap();
        let g = no_roots_in_gamma(rs).unwrap();
        println!(
            "n={:3} iters={:3} worst_res={:.2e} hausdorff={:.5} match={:.5} fill={:.5} margin={:.3e}",
            rs.n(),
            rs.iterations(),
            rs.worst_residual(),
            m.hausdorff_to_curve,
            m.max_match_to_zm,
            m.fill_gap,
            g.min_margin
        );
    }
    // classification margins across the full acceptance range
    let all: Vec<u32> = (2..=200).collect();
    let sets = solve_batch(&all).unwrap();
    let mut worst_iter = 0;
    for rs in &sets {
        worst_iter = worst_iter.max(rs.iterations());
        let real = count_real_roots(rs);
        let imag = count_imaginary_pairs(rs);
        let expect_real = usize::from(rs.n() % 2 == 1);
        let expect_imag = usize::from(rs.n() % 4 == 3);
        if real != expect_real || imag != expect_imag {
            println!(
                "CLASS MISMATCH n={} real={real} (want {expect_real}) imag={imag} (want {expect_imag})",
                rs.n()
            );
        }
        let g = no_roots_in_gamma(rs).unwrap();
        if !g.violations.is_empty() || g.min_margin < 0.0 {
            println!("GAMMA issue n={} margin={:.3e}", rs.n(), g.min_margin);
        }
    }
    println!("max iterations over 2..=200: {worst_iter}");
}
