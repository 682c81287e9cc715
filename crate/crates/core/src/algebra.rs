//! Exact factorization of the odd-index polynomials, perfect-square
//! criteria, and mod-p irreducibility certificates for the even-index
//! conjecture.
//!
//! The crate deliberately stops short of a general rational factorization
//! routine. What it provides is exact: the odd-`n` witness
//! `P_n = (1+z)·q_n(z²)`, a square test on the coefficients that blocks the
//! `q(z²)` lift from factoring, and mod-p irreducibility certificates, which
//! are sufficient (never necessary) evidence for irreducibility over the
//! rationals.

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::exec;
use crate::polynomials::{exact_divide, p_poly, q_poly, IntPoly};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Witness of the odd-index factorization `P_n = (1+z)·q_n(z²)`.
#[derive(Debug, Clone)]
pub struct FactorizationWitness {
    pub n: u32,
    /// The factor `1 + z`.
    pub linear: IntPoly,
    /// `q_n`, to be composed with `z²`.
    pub even_part: IntPoly,
    /// True once the product has been re-expanded and compared exactly.
    pub checked: bool,
}

/// Divides `P_n` by `1+z` exactly and verifies the quotient is `q_n(z²)`.
/// Errors for even `n`, where `P_n(−1) = ⟨n,0⟩ ≠ 0`.
pub fn factor_odd(n: u32) -> Result<FactorizationWitness> {
    if n % 2 == 0 {
        return Err(Error::Domain(format!(
            "factor_odd requires odd n, got {n}"
        )));
    }
    let linear = IntPoly::from_i64(&[1, 1]);
    let quotient = exact_divide(&p_poly(n), &linear)?;
    let even_part = q_poly(n);
    let checked = quotient == even_part.compose_square();
    Ok(FactorizationWitness {
        n,
        linear,
        even_part,
        checked,
    })
}

/// True exactly when `⌊√v⌋² = v`. Errors for negative input.
pub fn is_perfect_square(v: &BigInt) -> Result<bool> {
    if v.is_negative() {
        return Err(Error::Domain("is_perfect_square needs v >= 0".into()));
    }
    let root = v.sqrt();
    Ok(&root * &root == *v)
}

/// Report of the square test that blocks `q_n(z²)` from factoring.
#[derive(Debug, Clone)]
pub struct SquareCriterionReport {
    pub n: u32,
    pub constant_is_square: bool,
    pub leading_is_square: bool,
    /// True when either end coefficient is a non-square, which rules out any
    /// factorization of `q_n(z²)` — granted `q_n` itself is irreducible.
    pub reducibility_excluded: bool,
    /// For even `n` only: the same test on `P_n`'s own end coefficients.
    /// `P_n` is not of the form `q(z²)` for even `n`, so this carries no
    /// conclusion; it is reported for completeness.
    pub p_constant_is_square: Option<bool>,
    pub p_leading_is_square: Option<bool>,
    pub note: &'static str,
}

/// Applies the square test to `q_n`'s constant and leading coefficients.
pub fn q_square_criterion(n: u32) -> SquareCriterionReport {
    let q = q_poly(n);
    let constant_is_square = is_perfect_square(&q.coeff(0)).expect("constant is positive");
    let leading_is_square =
        is_perfect_square(q.leading().expect("q_n is nonzero")).expect("leading is positive");
    let (p_constant_is_square, p_leading_is_square) = if n % 2 == 0 {
        let p = p_poly(n);
        (
            Some(is_perfect_square(&p.coeff(0)).unwrap()),
            Some(is_perfect_square(p.leading().unwrap()).unwrap()),
        )
    } else {
        (None, None)
    };
    SquareCriterionReport {
        n,
        constant_is_square,
        leading_is_square,
        reducibility_excluded: !(constant_is_square && leading_is_square),
        p_constant_is_square,
        p_leading_is_square,
        note: "exclusion assumes q_n itself is irreducible over the rationals; \
               the test only rules out the q_n(z^2) lift factoring further",
    }
}

/// Outcome of a mod-p irreducibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPCertificate {
    pub p: u64,
    /// The reduced target, ascending coefficients in `0..p`.
    pub target: Vec<u64>,
    /// Irreducibility over the rationals follows when this is true (the
    /// leading coefficient did not vanish mod p); false proves nothing.
    pub irreducible_mod_p: bool,
}

/// Rabin's irreducibility test over the field with `p` elements:
/// a degree-`d` polynomial is irreducible iff `z^{p^d} ≡ z` and, for every
/// prime `r | d`, `gcd(z^{p^{d/r}} − z, f) = 1`.
///
/// Errors when `p` is not a prime below 2³¹, when `p` divides the leading
/// coefficient, or when the polynomial is constant.
pub fn irreducible_mod_p(poly: &IntPoly, p: u64) -> Result<ModPCertificate> {
    if !modp::is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if p >= 1 << 31 {
        return Err(Error::Domain(format!("prime {p} too large (need p < 2^31)")));
    }
    let Some(degree) = poly.degree() else {
        return Err(Error::Domain("zero polynomial".into()));
    };
    let lead_mod = modp::reduce_scalar(poly.leading().unwrap(), p);
    if lead_mod == 0 {
        return Err(Error::Domain(format!(
            "prime {p} divides the leading coefficient"
        )));
    }
    if degree == 0 {
        return Err(Error::Domain("constant polynomial".into()));
    }
    let f = modp::ModPoly::from_int_poly(poly, p).monic();
    let target = f.coeffs.clone();
    let d = degree;

    // x^{p^k} mod f for k = 1..=d via repeated p-th powers; reduce x itself
    // first so the degree-1 case compares like with like
    let x = modp::rem(&modp::ModPoly::x(p), &f);
    let mut frobenius = Vec::with_capacity(d + 1);
    frobenius.push(x.clone()); // k = 0
    for k in 1..=d {
        let next = modp::pow_mod(&frobenius[k - 1], p, &f);
        frobenius.push(next);
    }

    let mut irreducible = frobenius[d] == x;
    if irreducible {
        for r in modp::prime_factors(d as u64) {
            let e = d / r as usize;
            let shifted = modp::sub(&frobenius[e], &x, p);
            let g = modp::gcd(&shifted, &f);
            if g.degree().unwrap_or(0) != 0 {
                irreducible = false;
                break;
            }
        }
    }
    Ok(ModPCertificate {
        p,
        target,
        irreducible_mod_p: irreducible,
    })
}

/// One row of [`conjecture_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub n: u32,
    /// First listed prime whose certificate proves `P_n` irreducible over
    /// the rationals; `None` proves nothing either way.
    pub certifying_prime: Option<u64>,
}

/// For every even `n ≤ n_max`, looks for the first prime in `primes` that
/// certifies `P_n` irreducible. Candidates that are unusable for a given `n`
/// (composite, or dividing the leading coefficient) are skipped.
pub fn conjecture_scan(n_max: u32, primes: &[u64]) -> Vec<ScanEntry> {
    let targets: Vec<u32> = (2..=n_max).step_by(2).collect();
    exec::map_indexed(targets.len(), |i| {
        let n = targets[i];
        let poly = p_poly(n);
        let certifying_prime = primes.iter().copied().find(|&p| {
            matches!(
                irreducible_mod_p(&poly, p),
                Ok(ModPCertificate {
                    irreducible_mod_p: true,
                    ..
                })
            )
        });
        ScanEntry {
            n,
            certifying_prime,
        }
    })
}

/// Exact rational-root test for `P_n`. The constant coefficient is 1, so the
/// only candidates are `±1/d` for divisors `d` of the leading coefficient;
/// each is evaluated exactly after clearing denominators.
pub fn has_rational_root(n: u32) -> bool {
    let p = p_poly(n);
    let lead = p.leading().expect("nonzero");
    for d in divisors(lead, u64::from(n.max(2))) {
        if scaled_eval_at_inverse(&p, &d, true).is_zero()
            || scaled_eval_at_inverse(&p, &d, false).is_zero()
        {
            return true;
        }
    }
    false
}

/// `d^n · P(s/d)` for `s = ±1`: `Σ_k c_k s^k d^{n−k}`, all in exact integers.
fn scaled_eval_at_inverse(p: &IntPoly, d: &BigInt, negative: bool) -> BigInt {
    let mut acc = BigInt::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        let term = if negative && k % 2 == 1 { -c } else { c.clone() };
        acc = acc * d + term;
    }
    acc
}

/// All divisors of `v`, which must factor completely over primes up to
/// `bound` (true of any binomial coefficient `C(n, k)` with `n ≤ bound`).
fn divisors(v: &BigInt, bound: u64) -> Vec<BigInt> {
    let mut rest = v.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= bound && rest > BigInt::one() {
        let big_d = BigInt::from(d);
        let mut exp = 0;
        while (&rest % &big_d).is_zero() {
            rest /= &big_d;
            exp += 1;
        }
        if exp > 0 {
            factors.push((big_d, exp));
        }
        d += 1;
    }
    assert!(
        rest.is_one(),
        "divisor enumeration needs all prime factors <= {bound}"
    );
    let mut divs = vec![BigInt::one()];
    for (prime, exp) in factors {
        let mut extended = Vec::with_capacity(divs.len() * (exp as usize + 1));
        for base in &divs {
            let mut value = base.clone();
            extended.push(value.clone());
            for _ in 0..exp {
                value *= &prime;
                extended.push(value.clone());
            }
        }
        divs = extended;
    }
    divs
}

/// Checks that `C(2m+1, m)` is not a perfect square for every `m` in range.
pub fn central_binomials_are_nonsquare(m_max: u64) -> bool {
    let flags = exec::map_indexed(m_max as usize, |i| {
        let m = i as u64 + 1;
        let value = binomial(2 * m + 1, m);
        is_perfect_square(&value).expect("binomial is positive")
    });
    flags.into_iter().all(|square| !square)
}

/// Dense polynomial arithmetic over the field with `p` elements. Kept small:
/// degrees stay in the hundreds and `p` below 2³¹, so schoolbook operations
/// in `u64` are plenty.
pub(crate) mod modp {
    use crate::polynomials::IntPoly;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::ToPrimitive;

    pub fn is_prime(p: u64) -> bool {
        if p < 2 {
            return false;
        }
        if p % 2 == 0 {
            return p == 2;
        }
        let mut d = 3u64;
        while d * d <= p {
            if p % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    }

    pub fn prime_factors(mut v: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut d = 2u64;
        while d * d <= v {
            if v % d == 0 {
                out.push(d);
                while v % d == 0 {
                    v /= d;
                }
            }
            d += 1;
        }
        if v > 1 {
            out.push(v);
        }
        out
    }

    pub fn reduce_scalar(c: &BigInt, p: u64) -> u64 {
        c.mod_floor(&BigInt::from(p)).to_u64().expect("in range")
    }

    fn pow_scalar(mut base: u64, mut exp: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        base %= p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }

    fn inv_scalar(a: u64, p: u64) -> u64 {
        pow_scalar(a, p - 2, p)
    }

    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct ModPoly {
        pub p: u64,
        /// Ascending coefficients in `0..p`, no trailing zeros.
        pub coeffs: Vec<u64>,
    }

    impl ModPoly {
        pub fn from_int_poly(poly: &IntPoly, p: u64) -> ModPoly {
            let coeffs = poly.coeffs().iter().map(|c| reduce_scalar(c, p)).collect();
            ModPoly { p, coeffs }.trimmed()
        }

        pub fn x(p: u64) -> ModPoly {
            ModPoly {
                p,
                coeffs: vec![0, 1],
            }
        }

        fn trimmed(mut self) -> ModPoly {
            while self.coeffs.last() == Some(&0) {
                self.coeffs.pop();
            }
            self
        }

        pub fn is_zero(&self) -> bool {
            self.coeffs.is_empty()
        }

        pub fn degree(&self) -> Option<usize> {
            self.coeffs.len().checked_sub(1)
        }

        pub fn monic(&self) -> ModPoly {
            if self.is_zero() {
                return self.clone();
            }
            let inv = inv_scalar(*self.coeffs.last().unwrap(), self.p);
            ModPoly {
                p: self.p,
                coeffs: self.coeffs.iter().map(|&c| c * inv % self.p).collect(),
            }
        }
    }

    pub fn sub(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let av = a.coeffs.get(k).copied().unwrap_or(0);
                let bv = b.coeffs.get(k).copied().unwrap_or(0);
                (av + p - bv) % p
            })
            .collect();
        ModPoly { p, coeffs }.trimmed()
    }

    pub fn mul(a: &ModPoly, b: &ModPoly) -> ModPoly {
        let p = a.p;
        if a.is_zero() || b.is_zero() {
            return ModPoly {
                p,
                coeffs: Vec::new(),
            };
        }
        let mut coeffs = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &av) in a.coeffs.iter().enumerate() {
            if av == 0 {
                continue;
            }
            for (j, &bv) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + av * bv) % p;
            }
        }
        ModPoly { p, coeffs }.trimmed()
    }

    /// Remainder of `a` by a monic modulus.
    pub fn rem(a: &ModPoly, modulus: &ModPoly) -> ModPoly {
        let p = a.p;
        let md = modulus.degree().expect("nonzero modulus");
        debug_assert_eq!(*modulus.coeffs.last().unwrap(), 1, "modulus must be monic");
        let mut coeffs = a.coeffs.clone();
        while coeffs.len() > md {
            let lead = *coeffs.last().unwrap();
            let shift = coeffs.len() - 1 - md;
            if lead != 0 {
                for (k, &mc) in modulus.coeffs.iter().enumerate() {
                    let idx = shift + k;
                    coeffs[idx] = (coeffs[idx] + p - lead * mc % p) % p;
                }
            }
            coeffs.pop();
        }
        ModPoly { p, coeffs }.trimmed()
    }

    pub fn mul_rem(a: &ModPoly, b: &ModPoly, modulus: &ModPoly) -> ModPoly {
        rem(&mul(a, b), modulus)
    }

    /// `base^exp mod modulus` by repeated squaring.
    pub fn pow_mod(base: &ModPoly, mut exp: u64, modulus: &ModPoly) -> ModPoly {
        let p = base.p;
        let mut acc = ModPoly {
            p,
            coeffs: vec![1],
        };
        let mut sq = rem(base, modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_rem(&acc, &sq, modulus);
            }
            sq = mul_rem(&sq, &sq, modulus);
            exp >>= 1;
        }
        acc
    }

    /// Monic GCD over the field.
    pub fn gcd(a: &ModPoly, b: &ModPoly) -> ModPoly {
        let mut f = a.clone().trimmed();
        let mut g = b.clone().trimmed();
        while !g.is_zero() {
            let r = rem(&f, &g.monic());
            f = g;
            g = r;
        }
        f.monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::r_poly;

    #[test]
    fn factor_odd_examples() {
        let w = factor_odd(3).unwrap();
        assert_eq!(w.linear, IntPoly::from_i64(&[1, 1]));
        assert_eq!(w.even_part, IntPoly::from_i64(&[1, 3]));
        assert!(w.checked);

        let w = factor_odd(1).unwrap();
        assert_eq!(w.even_part, IntPoly::from_i64(&[1]));
        assert!(w.checked);

        let w = factor_odd(9).unwrap();
        assert_eq!(w.even_part, IntPoly::from_i64(&[1, 9, 36, 84, 126]));
        assert!(w.checked);

        assert!(factor_odd(4).is_err());
        for n in (1..=101u32).step_by(2) {
            assert!(factor_odd(n).unwrap().checked, "n = {n}");
        }
    }

    #[test]
    fn perfect_square_examples() {
        assert!(!is_perfect_square(&BigInt::from(3)).unwrap());
        assert!(is_perfect_square(&BigInt::from(0)).unwrap());
        assert!(is_perfect_square(&BigInt::from(1)).unwrap());
        assert!(is_perfect_square(&BigInt::from(144)).unwrap());
        assert!(!is_perfect_square(&BigInt::from(143)).unwrap());
        assert!(is_perfect_square(&BigInt::from(-4)).is_err());
        assert!(central_binomials_are_nonsquare(100));
    }

    #[test]
    fn square_criterion_examples() {
        let r = q_square_criterion(3);
        assert!(!r.leading_is_square && r.reducibility_excluded);
        assert_eq!(r.p_leading_is_square, None);

        let r = q_square_criterion(0);
        assert!(r.constant_is_square && r.leading_is_square);
        assert!(!r.reducibility_excluded);

        let r = q_square_criterion(7);
        assert!(r.reducibility_excluded); // leading C(7,3) = 35

        let r = q_square_criterion(4);
        assert!(r.p_leading_is_square.is_some());
        assert!(!r.note.is_empty());
    }

    /// Brute-force irreducibility over F_p, written independently of the
    /// `modp` module: try every monic divisor of degree 1..=d/2.
    fn oracle_irreducible(coeffs: &[u64], p: u64) -> bool {
        fn divides(candidate: &[u64], target: &[u64], p: u64) -> bool {
            let mut rem: Vec<u64> = target.to_vec();
            let dc = candidate.len() - 1;
            while rem.len() > dc {
                let lead = *rem.last().unwrap();
                let shift = rem.len() - 1 - dc;
                if lead != 0 {
                    for (k, &cc) in candidate.iter().enumerate() {
                        rem[shift + k] = (rem[shift + k] + p - lead * cc % p) % p;
                    }
                }
                rem.pop();
            }
            rem.iter().all(|&c| c == 0)
        }
        let d = coeffs.len() - 1;
        if d == 0 {
            return false;
        }
        for deg in 1..=d / 2 {
            let count = p.pow(deg as u32);
            for encoding in 0..count {
                let mut candidate = Vec::with_capacity(deg + 1);
                let mut e = encoding;
                for _ in 0..deg {
                    candidate.push(e % p);
                    e /= p;
                }
                candidate.push(1); // monic
                if divides(&candidate, coeffs, p) {
                    return false;
                }
            }
        }
        true
    }

    fn reduced(poly: &IntPoly, p: u64) -> Vec<u64> {
        modp::ModPoly::from_int_poly(poly, p).monic().coeffs
    }

    #[test]
    fn mod_p_examples() {
        for p in [2u64, 3, 5, 7, 11] {
            let cert = irreducible_mod_p(&IntPoly::from_i64(&[1, 1]), p).unwrap();
            assert!(cert.irreducible_mod_p, "1+z mod {p}");
        }
        let q4 = q_poly(4); // [1, 4, 6]
        let cert = irreducible_mod_p(&q4, 5).unwrap();
        assert_eq!(cert.irreducible_mod_p, oracle_irreducible(&reduced(&q4, 5), 5));

        let p2 = p_poly(2); // [1, 1, 2]
        let cert = irreducible_mod_p(&p2, 3).unwrap();
        assert_eq!(cert.irreducible_mod_p, oracle_irreducible(&reduced(&p2, 3), 3));
    }

    #[test]
    fn mod_p_domain_errors() {
        assert!(irreducible_mod_p(&IntPoly::from_i64(&[1, 1]), 4).is_err());
        assert!(irreducible_mod_p(&IntPoly::from_i64(&[1, 5]), 5).is_err());
        assert!(irreducible_mod_p(&IntPoly::from_i64(&[7]), 3).is_err());
        assert!(irreducible_mod_p(&IntPoly::zero(), 3).is_err());
    }

    #[test]
    fn mod_p_agrees_with_oracle_on_small_degrees() {
        for p in [2u64, 3] {
            for degree in 1..=4usize {
                let count = p.pow(degree as u32 + 1);
                for encoding in 0..count {
                    let mut coeffs = Vec::with_capacity(degree + 1);
                    let mut e = encoding;
                    for _ in 0..=degree {
                        coeffs.push((e % p) as i64);
                        e /= p;
                    }
                    if coeffs[degree] == 0 {
                        continue;
                    }
                    let poly = IntPoly::from_i64(&coeffs);
                    let cert = irreducible_mod_p(&poly, p).unwrap();
                    let want = oracle_irreducible(&reduced(&poly, p), p);
                    assert_eq!(
                        cert.irreducible_mod_p, want,
                        "p = {p}, coeffs = {coeffs:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn modular_layer_respects_exact_identity() {
        // P_n + z^{n+1} R_n = (1+z)(1+z²)^n carried into F_p
        for &p in &[3u64, 7, 13, 101] {
            for n in [5u32, 12, 23] {
                let lhs = modp::ModPoly::from_int_poly(
                    &(&p_poly(n) + &r_poly(n).shift(n as usize + 1)),
                    p,
                );
                let one_plus_z = modp::ModPoly::from_int_poly(&IntPoly::from_i64(&[1, 1]), p);
                let mut rhs = one_plus_z;
                let base = modp::ModPoly::from_int_poly(&IntPoly::from_i64(&[1, 0, 1]), p);
                for _ in 0..n {
                    rhs = modp::mul(&rhs, &base);
                }
                assert_eq!(lhs, rhs, "p = {p}, n = {n}");
            }
        }
    }

    #[test]
    fn conjecture_scan_shape_and_soundness() {
        let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23];
        let entries = conjecture_scan(16, &primes);
        let ns: Vec<u32> = entries.iter().map(|e| e.n).collect();
        assert_eq!(ns, vec![2, 4, 6, 8, 10, 12, 14, 16]);
        for entry in &entries {
            if let Some(p) = entry.certifying_prime {
                let cert = irreducible_mod_p(&p_poly(entry.n), p).unwrap();
                assert!(cert.irreducible_mod_p, "scan reported a bogus certificate");
            }
        }
        // degree <= 8 entries can be checked against the oracle
        for entry in entries.iter().filter(|e| e.n <= 8) {
            if let Some(p) = entry.certifying_prime {
                assert!(oracle_irreducible(&reduced(&p_poly(entry.n), p), p));
            }
        }
    }

    #[test]
    fn rational_root_check() {
        for n in [2u32, 4, 6, 10, 24] {
            assert!(!has_rational_root(n), "even n = {n} must have none");
        }
        for n in [1u32, 3, 9] {
            assert!(has_rational_root(n), "odd n = {n} has the trivial root");
        }
    }

    #[test]
    fn divisor_enumeration() {
        let divs = divisors(&BigInt::from(36), 6);
        assert_eq!(divs.len(), 9);
        let mut as_i64: Vec<i64> = divs.iter().map(|d| i64::try_from(d).unwrap()).collect();
        as_i64.sort_unstable();
        assert_eq!(as_i64, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }
}
