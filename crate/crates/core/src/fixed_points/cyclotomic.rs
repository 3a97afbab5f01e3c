//! Exact arithmetic in the cyclotomic field of a prime root of unity.
//!
//! Elements are rational polynomials in the root, reduced modulo the
//! cyclotomic polynomial `1 + x + ... + x^{p-1}`, so the coefficient
//! vector of length `p - 1` is a canonical form and equality is
//! coefficientwise. Only ring operations are needed downstream:
//! projective equality is tested by cross-multiplication and fractional
//! linear maps act through homogeneous coordinates, so no division ever
//! happens.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

/// An element of the degree-`p - 1` cyclotomic field, as the coefficient
/// vector of a reduced polynomial in the chosen primitive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    p: u64,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    fn with_coeffs(p: u64, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(coeffs.len(), (p - 1) as usize);
        CyclotomicNumber { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        Self::with_coeffs(p, vec![BigRational::zero(); (p - 1) as usize])
    }

    pub fn one(p: u64) -> Self {
        Self::from_integer(p, 1)
    }

    pub fn from_integer(p: u64, n: i64) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = BigRational::from_integer(BigInt::from(n));
        out
    }

    pub fn from_rational(p: u64, numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        let mut out = Self::zero(p);
        out.coeffs[0] = BigRational::new(BigInt::from(numerator), BigInt::from(denominator));
        out
    }

    /// The chosen primitive `p`-th root of unity.
    pub fn root_of_unity(p: u64) -> Self {
        Self::root_power(p, 1)
    }

    /// The `k`-th power of the root, `k` taken modulo `p`, in canonical
    /// reduced form.
    pub fn root_power(p: u64, k: i64) -> Self {
        let e = k.rem_euclid(p as i64) as u64;
        let mut out = Self::zero(p);
        if e < p - 1 {
            out.coeffs[e as usize] = BigRational::one();
        } else {
            // the top power is minus the sum of all lower powers
            for c in out.coeffs.iter_mut() {
                *c = -BigRational::one();
            }
        }
        out
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn assert_same_field(&self, other: &CyclotomicNumber) {
        assert_eq!(
            self.p, other.p,
            "arithmetic across distinct cyclotomic fields"
        );
    }

    /// Renders the coefficient vector as exact fraction strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*n")?,
                _ => write!(f, "{c}*n^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicNumber::with_coeffs(self.p, coeffs)
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CyclotomicNumber::with_coeffs(self.p, coeffs)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        CyclotomicNumber::with_coeffs(self.p, coeffs)
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.assert_same_field(rhs);
        let p = self.p as usize;
        // convolve, fold exponents with x^p = 1, then eliminate the top
        // power with x^{p-1} = -(1 + x + ... + x^{p-2})
        let mut folded = vec![BigRational::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut e = i + j;
                if e >= p {
                    e -= p;
                }
                folded[e] += a * b;
            }
        }
        let top = folded.pop().expect("length p");
        let coeffs = folded.into_iter().map(|c| c - &top).collect();
        CyclotomicNumber::with_coeffs(self.p, coeffs)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_has_order_p() {
        for p in [2u64, 3, 5, 7, 11] {
            let eta = CyclotomicNumber::root_of_unity(p);
            let mut acc = CyclotomicNumber::one(p);
            for _ in 0..p {
                acc = &acc * &eta;
            }
            assert!(acc.is_one(), "eta^p = 1 fails for p={p}");
            assert!(!eta.is_one() || p == 1);
        }
    }

    #[test]
    fn geometric_sum_vanishes() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let mut acc = CyclotomicNumber::zero(p);
            for k in 0..p {
                acc = &acc + &CyclotomicNumber::root_power(p, k as i64);
            }
            assert!(acc.is_zero(), "1 + eta + ... + eta^(p-1) != 0 for p={p}");
        }
    }

    #[test]
    fn power_folding_matches_repeated_multiplication() {
        let p = 7;
        let eta = CyclotomicNumber::root_of_unity(p);
        let mut acc = CyclotomicNumber::one(p);
        for k in 0..20 {
            assert_eq!(acc, CyclotomicNumber::root_power(p, k));
            acc = &acc * &eta;
        }
    }

    #[test]
    fn negative_exponents_wrap() {
        let p = 5;
        let direct = CyclotomicNumber::root_power(p, -1);
        let wrapped = CyclotomicNumber::root_power(p, 4);
        assert_eq!(direct, wrapped);
    }

    #[test]
    fn two_is_minus_one() {
        let eta = CyclotomicNumber::root_of_unity(2);
        assert_eq!(eta, CyclotomicNumber::from_integer(2, -1));
    }

    #[test]
    fn rationals_embed() {
        let half = CyclotomicNumber::from_rational(5, 1, 2);
        let sum = &half + &half;
        assert!(sum.is_one());
    }
}
