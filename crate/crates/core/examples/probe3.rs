// Scratch: convergence and annulus across the full supported range.
use pascalian::roots::{annulus_check, solve_batch, solve_roots};

fn main() {
    for n in [50u32, 200, 256, 300, 400, 511, 512] {
        match solve_roots(n) {
            Ok(rs) => {
                let rep = annulus_check(&rs);
                println!(
                    "n={n} iters={} min={:.6} max={:.6} viol={} res={:.2e}",
                    rs.iterations(), rep.min_norm, rep.max_norm,
                    rep.violations.len(), rs.worst_residual()
                );
            }
            Err(e) => println!("n={n} FAILED: {e}"),
        }
    }
    let all: Vec<u32> = (1..=512).collect();
    match solve_batch(&all) {
        Ok(sets) => {
            let worst_iter = sets.iter().map(|r| r.iterations()).max().unwrap();
            let worst_res = sets.iter().map(|r| r.worst_residual()).fold(0.0, f64::max);
            println!("full sweep 1..=512 ok; max iters={worst_iter} worst residual={worst_res:.2e}");
        }
        Err(e) => println!("sweep FAILED: {e}"),
    }
}
