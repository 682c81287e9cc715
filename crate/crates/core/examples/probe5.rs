// Scratch: replicate the structured evaluation at the stuck seed.
use num_complex::Complex64;
use num_traits::ToPrimitive;
use pascalian::polynomials::r_poly;

fn main() {
    let n = 512u32;
    let z = Complex64::new(1.009669889239958, 0.0025576868039515806);
    let r_coeffs: Vec<f64> = r_poly(n).coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
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
    println!("r={r:e} dr={dr:e}");
    println!("w^n={w_pow_n:e} z^n={z_pow_n:e}");
    println!("a={a:e} b={b:e} p={:e}", a - b);
    println!("da={da:e} db={db:e} dp={:e}", da - db);
}
