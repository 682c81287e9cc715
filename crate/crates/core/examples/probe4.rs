// Scratch: dump worst residual points for n=512.
use pascalian::roots::{solve_roots_with, SolverConfig};

fn main() {
    let cfg = SolverConfig { residual_tol: 10.0, ..Default::default() };
    let rs = solve_roots_with(512, &cfg).unwrap();
    let mut idx: Vec<usize> = (0..rs.roots().len()).collect();
    idx.sort_by(|&a, &b| rs.residuals()[b].total_cmp(&rs.residuals()[a]));
    for &i in idx.iter().take(6) {
        println!("res={:.3e} z={:?} |z|={:.4}", rs.residuals()[i], rs.roots()[i], rs.roots()[i].norm());
    }
    // count distinct-ish roots
    let mut dup = 0;
    for i in 0..rs.roots().len() {
        for j in 0..i {
            if (rs.roots()[i] - rs.roots()[j]).norm() < 1e-6 { dup += 1; }
        }
    }
    println!("near-duplicate pairs: {dup}");
}
