// Scratch: manual first Aberth sweep for the stuck index at n=512.
use num_complex::Complex64;
use num_traits::ToPrimitive;
use pascalian::curve::approximants;
use pascalian::polynomials::r_poly;

fn eval_pd(n: u32, r_coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut r = Complex64::new(0.0, 0.0);
    let mut dr = Complex64::new(0.0, 0.0);
    for &c in r_coeffs.iter().rev() {
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
    (a - b, da - db)
}

fn main() {
    let n = 512u32;
    let r_coeffs: Vec<f64> = r_poly(n).coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
    let zm = approximants(n).points;
    let seeds: Vec<Complex64> = (0..n as usize)
        .map(|idx| zm[idx] + Complex64::from_polar(0.01, 0.7 * (idx + 1) as f64))
        .collect();
    let i = 511usize;
    let zi = seeds[i];
    let (p, dp) = eval_pd(n, &r_coeffs, zi);
    let log_deriv = dp / p;
    let mut repulsion = Complex64::new(0.0, 0.0);
    for (j, &zj) in seeds.iter().enumerate() {
        if j != i {
            repulsion += (zi - zj).inv();
        }
    }
    let denom = log_deriv - repulsion;
    println!("p={p:e}\ndp={dp:e}\nlog_deriv={log_deriv}\nrepulsion={repulsion}\ndenom={denom}\nstep={}", denom.inv());
}
