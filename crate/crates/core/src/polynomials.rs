//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, the `P_n` / `R_n` / `q_n` / `U_{2m}` constructors, and exact
//! verification of the recursions and identities relating them.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial is the empty coefficient list. Multiplication is the
//! schoolbook convolution: degrees stay in the low hundreds here, where the
//! quadratic algorithm on dense data wins.

use crate::combinatorics::pasc;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of degree `k` (zero past the end).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Multiplies every coefficient by `s`.
    pub fn scale(&self, s: &BigInt) -> IntPoly {
        if s.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Substitutes `x^2` for `x`: `p(x) -> p(x^2)`.
    pub fn compose_square(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); 2 * self.coeffs.len() - 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// The reciprocal polynomial `x^deg * p(1/x)` (coefficients reversed).
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, exp: u32) -> IntPoly {
        let mut result = IntPoly::one();
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// GCD of the coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// The primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut content = self.content();
        if self.leading().unwrap().is_negative() {
            content = -content;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = if first && c.is_negative() {
                // leading term of a negative-constant polynomial
                c.clone()
            } else {
                c.abs()
            };
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly { coeffs }
    }
}

/// `P_n(z) = Σ_k ⟨n k⟩ z^{n−k}`; ascending coefficient `j` is `C(n, ⌊j/2⌋)`.
pub fn p_poly(n: u32) -> IntPoly {
    IntPoly {
        coeffs: (0..=n).map(|j| pasc(n, n - j)).collect(),
    }
}

/// `R_n(x) = Σ_k ⟨n k⟩ x^k`, the reciprocal of `P_n`.
pub fn r_poly(n: u32) -> IntPoly {
    IntPoly {
        coeffs: (0..=n).map(|k| pasc(n, k)).collect(),
    }
}

/// Truncated binomial `q_n(z) = Σ_{k=0}^{⌊n/2⌋} C(n,k) z^k`.
pub fn q_poly(n: u32) -> IntPoly {
    IntPoly {
        coeffs: (0..=n / 2)
            .map(|k| crate::combinatorics::binomial(n.into(), k.into()))
            .collect(),
    }
}

/// `U_{2m}(z) = 1 + Σ_{k=1}^m (⟨2m, 2m−2k⟩ − ⟨2m, 2m−2k+1⟩) z^k`, the even
/// part of `(1−z)P_{2m}(z)` before its final term. All coefficients are
/// positive and `U_{2m}(1) = ⟨2m, 0⟩`.
pub fn u_poly(m: u32) -> IntPoly {
    assert!(m >= 1, "u_poly requires m >= 1");
    let n = 2 * m;
    let mut coeffs = vec![BigInt::one()];
    for k in 1..=m {
        coeffs.push(pasc(n, n - 2 * k) - pasc(n, n - 2 * k + 1));
    }
    IntPoly::from_coeffs(coeffs)
}

/// Checks `x·R_n(x) = (x²+1)·R_{n−1}(x) + ⟨n−1,0⟩·(x−1)` exactly (the basic
/// recursion with denominators cleared).
pub fn check_r_recursion(n: u32) -> bool {
    assert!(n >= 1, "check_r_recursion requires n >= 1");
    let lhs = r_poly(n).shift(1);
    let x2_plus_1 = IntPoly::from_i64(&[1, 0, 1]);
    let x_minus_1 = IntPoly::from_i64(&[-1, 1]);
    let rhs = &(&x2_plus_1 * &r_poly(n - 1)) + &x_minus_1.scale(&pasc(n - 1, 0));
    lhs == rhs
}

/// Checks `P_n = (1+x²)·P_{n−1} + ⟨n−1,0⟩·(1−x)·x^n` exactly.
pub fn check_p_recursion(n: u32) -> bool {
    assert!(n >= 1, "check_p_recursion requires n >= 1");
    let x2_plus_1 = IntPoly::from_i64(&[1, 0, 1]);
    let one_minus_x = IntPoly::from_i64(&[1, -1]);
    let tail = one_minus_x.scale(&pasc(n - 1, 0)).shift(n as usize);
    let rhs = &(&x2_plus_1 * &p_poly(n - 1)) + &tail;
    p_poly(n) == rhs
}

/// Checks the k-fold recursion
/// `P_n = (1+x²)^k·P_{n−k} + (1−x)·Σ_{j=0}^{k−1} ⟨n−j−1,0⟩·(1+x²)^j·x^{n−j}`
/// exactly. Errors when `k` is outside `1..=n−1`.
pub fn check_extended_recursion(n: u32, k: u32) -> Result<bool> {
    if k < 1 || k + 1 > n {
        return Err(Error::Domain(format!(
            "check_extended_recursion requires 1 <= k <= n-1, got n = {n}, k = {k}"
        )));
    }
    let x2_plus_1 = IntPoly::from_i64(&[1, 0, 1]);
    let one_minus_x = IntPoly::from_i64(&[1, -1]);
    let mut sum = IntPoly::zero();
    let mut power = IntPoly::one(); // (1+x²)^j
    for j in 0..k {
        let term = power
            .scale(&pasc(n - j - 1, 0))
            .shift((n - j) as usize);
        sum = &sum + &term;
        power = &power * &x2_plus_1;
    }
    // after the loop, power = (1+x²)^k
    let rhs = &(&power * &p_poly(n - k)) + &(&one_minus_x * &sum);
    Ok(p_poly(n) == rhs)
}

/// Checks `P_n = (2x)^n + (1−x)·Σ_{j=0}^{n−1} ⟨n−j−1,0⟩·P_j·x^{n−j−1}`
/// exactly.
pub fn check_linear_decomposition(n: u32) -> bool {
    assert!(n >= 1, "check_linear_decomposition requires n >= 1");
    let one_minus_x = IntPoly::from_i64(&[1, -1]);
    let mut sum = IntPoly::zero();
    for j in 0..n {
        let term = p_poly(j)
            .scale(&pasc(n - j - 1, 0))
            .shift((n - j - 1) as usize);
        sum = &sum + &term;
    }
    let two_x_pow = IntPoly::from_i64(&[0, 2]).pow(n);
    let rhs = &two_x_pow + &(&one_minus_x * &sum);
    p_poly(n) == rhs
}

/// Checks `P_n(x) + x^{n+1}·R_n(x) = (1+x)·(1+x²)^n` exactly.
pub fn check_binomial_identity(n: u32) -> bool {
    let lhs = &p_poly(n) + &r_poly(n).shift(n as usize + 1);
    let rhs = &IntPoly::from_i64(&[1, 1]) * &IntPoly::from_i64(&[1, 0, 1]).pow(n);
    lhs == rhs
}

/// Checks `(1−z)·P_{2m}(z) = U_{2m}(z²) − ⟨2m,0⟩·z^{2m+1}` exactly.
pub fn check_u_identity(m: u32) -> bool {
    assert!(m >= 1, "check_u_identity requires m >= 1");
    let lhs = &IntPoly::from_i64(&[1, -1]) * &p_poly(2 * m);
    let tail = IntPoly::from_coeffs(vec![pasc(2 * m, 0)]).shift(2 * m as usize + 1);
    let rhs = &u_poly(m).compose_square() - &tail;
    lhs == rhs
}

/// Exact division in `Z[x]`: returns `q` with `a = b·q` when it exists.
///
/// Fails with [`Error::ZeroDivisor`] when `b` is zero and with
/// [`Error::NonzeroRemainder`] (carrying the running remainder) when `b` does
/// not divide `a` over the integers.
pub fn exact_divide(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if b.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if a.is_zero() {
        return Ok(IntPoly::zero());
    }
    let deg_b = b.degree().unwrap();
    let lead_b = b.leading().unwrap();
    let mut rem = a.clone();
    let deg_a = rem.degree().unwrap();
    if deg_a < deg_b {
        return Err(Error::NonzeroRemainder { remainder: rem });
    }
    let mut quot = vec![BigInt::zero(); deg_a - deg_b + 1];
    while let Some(deg_r) = rem.degree() {
        if deg_r < deg_b {
            break;
        }
        let lead_r = rem.leading().unwrap();
        let (q, r) = lead_r.div_rem(lead_b);
        if !r.is_zero() {
            return Err(Error::NonzeroRemainder { remainder: rem });
        }
        let shift = deg_r - deg_b;
        quot[shift] = q.clone();
        rem = &rem - &b.scale(&q).shift(shift);
    }
    if rem.is_zero() {
        Ok(IntPoly::from_coeffs(quot))
    } else {
        Err(Error::NonzeroRemainder { remainder: rem })
    }
}

/// Pseudo-remainder of `a` by `b`: the remainder of `lc(b)^{da−db+1}·a` under
/// long division, which keeps every step integral.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let deg_b = b.degree().expect("pseudo_rem by zero");
    let lead_b = b.leading().unwrap().clone();
    let Some(deg_a) = a.degree() else {
        return IntPoly::zero();
    };
    debug_assert!(deg_a >= deg_b);
    let mut rem = a.scale(&num_traits::pow(lead_b.clone(), deg_a - deg_b + 1));
    while let Some(deg_r) = rem.degree() {
        if deg_r < deg_b {
            break;
        }
        let q = rem.leading().unwrap() / &lead_b;
        rem = &rem - &b.scale(&q).shift(deg_r - deg_b);
    }
    rem
}

/// Primitive GCD over the rationals via the fraction-free (primitive
/// pseudo-remainder) Euclidean sequence. The result has content 1 and a
/// positive leading coefficient. Panics if both inputs are zero.
pub fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> IntPoly {
    assert!(
        !(a.is_zero() && b.is_zero()),
        "gcd_primitive of two zero polynomials"
    );
    let mut f = a.primitive_part();
    let mut g = b.primitive_part();
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g).primitive_part();
        f = g;
        g = r;
    }
    f
}

/// Exact Horner evaluation at a rational point; the result is reduced.
pub fn eval_rational(p: &IntPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn p_poly_examples() {
        assert_eq!(p_poly(3), poly(&[1, 1, 3, 3]));
        assert_eq!(p_poly(0), poly(&[1]));
        assert_eq!(p_poly(6), poly(&[1, 1, 6, 6, 15, 15, 20]));
    }

    #[test]
    fn r_poly_examples() {
        assert_eq!(r_poly(2), poly(&[2, 1, 1]));
        assert_eq!(r_poly(1), poly(&[1, 1]));
        assert_eq!(r_poly(3), poly(&[3, 3, 1, 1]));
    }

    #[test]
    fn r_is_reverse_of_p() {
        for n in 0..=200 {
            assert_eq!(p_poly(n).reversed(), r_poly(n), "n = {n}");
        }
    }

    #[test]
    fn q_poly_examples() {
        assert_eq!(q_poly(3), poly(&[1, 3]));
        assert_eq!(q_poly(0), poly(&[1]));
        assert_eq!(q_poly(4), poly(&[1, 4, 6]));
        assert_eq!(q_poly(9), poly(&[1, 9, 36, 84, 126]));
    }

    #[test]
    fn q_decomposition_of_p() {
        let one_plus_z = poly(&[1, 1]);
        for n in 0..=80u32 {
            let lifted = &one_plus_z * &q_poly(n).compose_square();
            if n % 2 == 1 {
                assert_eq!(lifted, p_poly(n), "odd n = {n}");
            } else {
                // (1+z)·q_n(z²) overshoots P_n by its z^{n+1} term ⟨n,0⟩.
                let tail = IntPoly::from_coeffs(vec![pasc(n, 0)]).shift(n as usize + 1);
                assert_eq!(&lifted - &tail, p_poly(n), "even n = {n}");
            }
        }
    }

    #[test]
    fn u_poly_examples() {
        assert_eq!(u_poly(1), poly(&[1, 1]));
        // Frozen from expanding (1−z)·P_4(z) = U_4(z²) − 6z^5 exactly:
        // (1−z)(1+z+4z²+4z³+6z⁴) = 1 + 3z² + 2z⁴ − 6z⁵.
        assert_eq!(u_poly(2), poly(&[1, 3, 2]));
        assert_eq!(
            eval_rational(&u_poly(2), &BigRational::from_integer(1.into()))
                .to_integer()
                .to_i64(),
            Some(6)
        );
        for m in 1..=60 {
            assert!(check_u_identity(m), "m = {m}");
            let u = u_poly(m);
            assert!(u.coeffs().iter().all(|c| c > &BigInt::zero()));
            assert_eq!(u.eval_bigint(&BigInt::one()), pasc(2 * m, 0), "m = {m}");
        }
    }

    #[test]
    fn recursions_hold() {
        for n in 1..=120 {
            assert!(check_r_recursion(n), "r recursion n = {n}");
            assert!(check_p_recursion(n), "p recursion n = {n}");
            assert!(check_binomial_identity(n), "binomial identity n = {n}");
        }
        assert!(check_binomial_identity(0));
        assert!(check_extended_recursion(2, 1).unwrap());
        assert!(check_extended_recursion(9, 4).unwrap());
        assert!(check_extended_recursion(40, 39).unwrap());
        for n in [1u32, 6, 60] {
            assert!(check_linear_decomposition(n), "linear n = {n}");
        }
    }

    #[test]
    fn extended_recursion_rejects_bad_k() {
        assert!(check_extended_recursion(5, 0).is_err());
        assert!(check_extended_recursion(5, 5).is_err());
    }

    #[test]
    fn exact_divide_examples() {
        let q = exact_divide(&p_poly(3), &poly(&[1, 1])).unwrap();
        assert_eq!(q, poly(&[1, 0, 3])); // q_3(z²)
        assert_eq!(exact_divide(&poly(&[1]), &poly(&[1])).unwrap(), poly(&[1]));
        match exact_divide(&p_poly(4), &poly(&[1, 1])) {
            Err(Error::NonzeroRemainder { remainder }) => {
                assert_eq!(remainder, poly(&[6])); // P_4(−1) = ⟨4,0⟩
            }
            other => panic!("expected remainder error, got {other:?}"),
        }
        assert!(matches!(
            exact_divide(&poly(&[1]), &IntPoly::zero()),
            Err(Error::ZeroDivisor)
        ));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_primitive(&p_poly(5), &p_poly(3)), poly(&[1, 1]));
        assert_eq!(gcd_primitive(&p_poly(4), &p_poly(2)), poly(&[1]));
        let a = poly(&[-6, 0, 2]);
        assert_eq!(gcd_primitive(&a, &a), poly(&[-3, 0, 1]));
        assert_eq!(gcd_primitive(&IntPoly::zero(), &a), poly(&[-3, 0, 1]));
    }

    #[test]
    fn gcd_consecutive_pairs() {
        for n in 3..=60u32 {
            let g = gcd_primitive(&p_poly(n), &p_poly(n - 2));
            if n % 2 == 1 {
                assert_eq!(g, poly(&[1, 1]), "odd n = {n}");
            } else {
                assert_eq!(g, poly(&[1]), "even n = {n}");
            }
        }
    }

    #[test]
    fn eval_examples() {
        let one = BigRational::from_integer(1.into());
        assert_eq!(
            eval_rational(&p_poly(10), &one),
            BigRational::from_integer(1024.into())
        );
        let minus_one = BigRational::from_integer((-1).into());
        assert!(eval_rational(&p_poly(3), &minus_one).is_zero());
        assert_eq!(
            eval_rational(&p_poly(2), &BigRational::zero()),
            BigRational::from_integer(1.into())
        );
        let half = BigRational::new(1.into(), 2.into());
        // P_2(1/2) = 1 + 1/2 + 2/4 = 2
        assert_eq!(
            eval_rational(&p_poly(2), &half),
            BigRational::from_integer(2.into())
        );
    }

    #[test]
    fn p_coefficients_weakly_increase() {
        for n in 0..=200u32 {
            let p = p_poly(n);
            assert!(p.coeffs().windows(2).all(|w| w[0] <= w[1]), "n = {n}");
            assert_eq!(p.coeff(0), BigInt::one());
            assert_eq!(*p.leading().unwrap(), pasc(n, 0));
        }
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(r_poly(3).to_string(), "3 + 3*x + x^2 + x^3");
        assert_eq!(poly(&[1, -1]).to_string(), "1 - x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
