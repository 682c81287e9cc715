//! Truncated power series in `z` whose coefficients are integer polynomials
//! in `x`, used to verify the generating functions of `P_n` and `R_n`
//! coefficient by coefficient. All arithmetic is exact modulo `z^{N+1}`;
//! convergence plays no role.

use crate::combinatorics::pasc;
use crate::polynomials::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::ops::{Add, Mul, Sub};

/// A power series in `z` truncated at order `N`: `coeffs[j]` is the
/// polynomial-in-`x` coefficient of `z^j`, `j = 0..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesZ {
    coeffs: Vec<IntPoly>,
}

impl SeriesZ {
    /// The zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        SeriesZ {
            coeffs: vec![IntPoly::zero(); order + 1],
        }
    }

    /// Builds a series from its coefficients; the order is `len − 1`.
    pub fn from_coeffs(coeffs: Vec<IntPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the z^0 term");
        SeriesZ { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n` (must be within the truncation).
    pub fn coeff(&self, n: usize) -> &IntPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    /// Re-truncates (or zero-pads) to the given order.
    pub fn truncated(&self, order: usize) -> SeriesZ {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, IntPoly::zero());
        SeriesZ { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(IntPoly::is_zero)
    }
}

impl Add for &SeriesZ {
    type Output = SeriesZ;
    fn add(self, rhs: &SeriesZ) -> SeriesZ {
        let order = self.order().min(rhs.order());
        SeriesZ {
            coeffs: (0..=order)
                .map(|j| self.coeff(j) + rhs.coeff(j))
                .collect(),
        }
    }
}

impl Sub for &SeriesZ {
    type Output = SeriesZ;
    fn sub(self, rhs: &SeriesZ) -> SeriesZ {
        let order = self.order().min(rhs.order());
        SeriesZ {
            coeffs: (0..=order)
                .map(|j| self.coeff(j) - rhs.coeff(j))
                .collect(),
        }
    }
}

impl Mul for &SeriesZ {
    type Output = SeriesZ;
    fn mul(self, rhs: &SeriesZ) -> SeriesZ {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![IntPoly::zero(); order + 1];
        for i in 0..=order {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeff(j).is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(self.coeff(i) * rhs.coeff(j));
            }
        }
        SeriesZ { coeffs }
    }
}

/// The central-column sequence `⟨n 0⟩ = C(n, ⌊n/2⌋)` for `n = 0..=n_max`.
pub fn central_binomial_series(n_max: u32) -> Vec<BigInt> {
    (0..=n_max).map(|n| pasc(n, 0)).collect()
}

/// The expansion of `√((1+2xz)/(1−2xz))`: constant term 1, then
/// `2·⟨n−1,0⟩·x^n` at `z^n`.
pub fn sqrt_ratio_series(order: u32) -> SeriesZ {
    let mut coeffs = vec![IntPoly::one()];
    for n in 1..=order {
        let mut c = vec![BigInt::zero(); n as usize + 1];
        c[n as usize] = BigInt::from(2) * pasc(n - 1, 0);
        coeffs.push(IntPoly::from_coeffs(c));
    }
    SeriesZ { coeffs }
}

/// Halves every coefficient, checking divisibility as it goes; the evenness
/// is itself one of the identities under test.
fn halve(p: &IntPoly) -> IntPoly {
    IntPoly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_even(), "numerator coefficient {c} is odd");
                c / BigInt::from(2)
            })
            .collect(),
    )
}

/// Exact division of a polynomial coefficient by `x`; the constant term must
/// vanish.
fn div_x(p: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    assert!(
        p.coeff(0).is_zero(),
        "polynomial {p} is not divisible by x"
    );
    IntPoly::from_coeffs(p.coeffs()[1..].to_vec())
}

/// The generating series of the `P_n`: coefficient of `z^n` is `P_n(x)`.
///
/// Computed as `[2 + (x−1)(1−S)] / 2` expanded against the geometric series
/// of `z(1+x²)`, where `S` is [`sqrt_ratio_series`]. Every numerator
/// coefficient is asserted even before halving.
pub fn gf_g_series(order: u32) -> SeriesZ {
    let order = order as usize;
    let s = sqrt_ratio_series(order as u32);
    let x_minus_1 = IntPoly::from_i64(&[-1, 1]);
    let two = IntPoly::from_i64(&[2]);

    // numerator = 2 + (x−1)(1 − S), with all-even coefficients
    let mut numerator_half = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let one_minus_s = if n == 0 {
            &IntPoly::one() - s.coeff(0)
        } else {
            -s.coeff(n)
        };
        let mut term = &x_minus_1 * &one_minus_s;
        if n == 0 {
            term = &term + &two;
        }
        numerator_half.push(halve(&term));
    }

    // G·(1 − z(1+x²)) = numerator/2, i.e. g_n = nh_n + (1+x²)·g_{n−1}
    let x2_plus_1 = IntPoly::from_i64(&[1, 0, 1]);
    let mut coeffs: Vec<IntPoly> = Vec::with_capacity(order + 1);
    for (n, nh) in numerator_half.into_iter().enumerate() {
        let g = if n == 0 {
            nh
        } else {
            &nh + &(&x2_plus_1 * &coeffs[n - 1])
        };
        coeffs.push(g);
    }
    SeriesZ { coeffs }
}

/// The generating series of the `R_n`: coefficient of `z^n` is `R_n(x)`.
///
/// Computed from `H·(x − z(1+x²)) = x − (1−x)·Σ_{n≥1} ⟨n−1,0⟩ z^n`, which
/// resolves to `h_n = (nh_n + (1+x²)·h_{n−1}) / x` with an exact division by
/// `x` at every step.
pub fn gf_h_series(order: u32) -> SeriesZ {
    let order = order as usize;
    let x_minus_1 = IntPoly::from_i64(&[-1, 1]);
    let x2_plus_1 = IntPoly::from_i64(&[1, 0, 1]);
    let mut coeffs: Vec<IntPoly> = Vec::with_capacity(order + 1);
    coeffs.push(IntPoly::one()); // R_0 = 1
    for n in 1..=order {
        let nh = x_minus_1.scale(&pasc(n as u32 - 1, 0));
        let h = div_x(&(&nh + &(&x2_plus_1 * &coeffs[n - 1])));
        coeffs.push(h);
    }
    SeriesZ { coeffs }
}
